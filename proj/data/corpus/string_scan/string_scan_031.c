int main() {
    char str[256];
    int len = 0, i;
    int ch;
    while ((ch = getchar()) != '\n' && ch != -1) {
        str[len++] = (char)ch;
    }
    str[len] = '\0';
    int state = 0;
    int words = 0;
    for (i = 0; i < len; i++) {
        if (str[i] == ' ' || str[i] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    for (i = 0; i < len; i++) {
        if (str[i] >= 'a' && str[i] <= 'z') {
            str[i] -= 'a' - 'A';
        }
    }
    printf("%s\n", str);
    return 0;
}
