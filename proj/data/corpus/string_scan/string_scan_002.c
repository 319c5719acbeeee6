int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    char buf[100005];
    int len = 0, i;
    do {
        buf[len] = getchar();
    } while (buf[len++] != '\n');
    buf[--len] = 0;
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (i = 0; i < len; i++) {
        char ch = buf[i];
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')) {
            letters++;
        }
        else if (ch >= '0' && ch <= '9') {
            digits++;
        }
        else if (ch == ' ') {
            spaces++;
        }
        else {
            others++;
        }
    }
    printf("%d %d %d %d\n", letters, digits, spaces, others);
    printf("%d\n", max2(len, 0));
    return 0;
}
