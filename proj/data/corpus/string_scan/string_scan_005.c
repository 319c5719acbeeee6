int main(void) {
    char str[1024];
    int len;
    scanf("%s", str);
    len = 0;
    while (str[len] != '\0') {
        len++;
    }
    int state = 0;
    int words = 0;
    for (int i = 0; i < len; i++) {
        if (str[i] == ' ' || str[i] == '\t') {
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
