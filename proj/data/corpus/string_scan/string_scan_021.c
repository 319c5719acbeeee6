int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char s[1000];
    int len = 0, idx;
    do {
        s[len] = getchar();
    } while (s[len++] != '\n');
    s[--len] = 0;
    int state = 0;
    int words = 0;
    for (idx = 0; idx < len; idx++) {
        if (s[idx] == ' ' || s[idx] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    return 0;
}
