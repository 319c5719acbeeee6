int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    char line[100005];
    int len = 0;
    while (1) {
        int ch = getchar();
        if (ch == '\n' || ch == -1) {
            break;
        }
        line[len++] = (char)ch;
    }
    line[len] = '\0';
    int vowels = 0;
    char *p = line;
    while (*p) {
        if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u') {
            vowels++;
        }
        p++;
    }
    printf("%d\n", vowels);
    printf("%d\n", max2(len, 0));
    return 0;
}
