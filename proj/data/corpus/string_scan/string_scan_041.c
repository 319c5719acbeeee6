int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    char s[1000];
    int len = 0, i;
    int ch;
    while ((ch = getchar()) != '\n' && ch != -1) {
        s[len++] = (char)ch;
    }
    s[len] = '\0';
    int state = 0;
    int words = 0;
    for (i = 0; i < len; i++) {
        if (s[i] == ' ' || s[i] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    printf("%d\n", max2(len, 0));
    return 0;
}
