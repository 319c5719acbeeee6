int main() {
    char s[100005];
    int len = 0, k;
    do {
        s[len] = getchar();
    } while (s[len++] != '\n');
    s[--len] = 0;
    int state = 0;
    int words = 0;
    for (k = 0; k < len; k++) {
        if (s[k] == ' ' || s[k] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    for (k = 0; k < len; k++) {
        if (s[k] >= 'a' && s[k] <= 'z') {
            s[k] -= 'a' - 'A';
        }
    }
    printf("%s\n", s);
    return 0;
}
