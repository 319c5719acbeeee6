int main(void) {
    char str[1024];
    int len, idx;
    scanf("%s", str);
    len = 0;
    while (str[len] != '\0') {
        len++;
    }
    for (idx = 0; idx < len / 2; idx++) {
        char t = str[idx];
        str[idx] = str[len - 1 - idx];
        str[len - 1 - idx] = t;
    }
    printf("%s\n", str);
    return 0;
}
