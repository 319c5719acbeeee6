int main(void) {
    char str[256];
    int len = 0, i;
    int ch;
    while ((ch = getchar()) != '\n' && ch != -1) {
        str[len++] = (char)ch;
    }
    str[len] = '\0';
    for (i = 0; i < len / 2; i++) {
        char t = str[i];
        str[i] = str[len - 1 - i];
        str[len - 1 - i] = t;
    }
    printf("%s\n", str);
    for (i = 0; i < len; i++) {
        if (str[i] >= 'a' && str[i] <= 'z') {
            str[i] -= 'a' - 'A';
        }
    }
    printf("%s\n", str);
    return 0;
}
