int main(void) {
    char s[100005];
    int len, i;
    scanf("%s", s);
    len = 0;
    while (s[len] != '\0') {
        len++;
    }
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
    return 0;
}
