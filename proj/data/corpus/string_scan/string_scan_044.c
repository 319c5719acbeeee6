int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    char line[256];
    int len = 0, idx;
    do {
        line[len] = getchar();
    } while (line[len++] != '\n');
    line[--len] = 0;
    for (int idx2 = len - 1; idx2 >= 0; idx2--) {
        putchar(line[idx2]);
    }
    putchar('\n');
    printf("%d\n", max2(len, 0));
    return 0;
}
