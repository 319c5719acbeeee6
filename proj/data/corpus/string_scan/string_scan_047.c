int main(void) {
    char str[256];
    int len, k;
    scanf("%s", str);
    len = 0;
    while (str[len] != '\0') {
        len++;
    }
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (k = 0; k < len; k++) {
        char ch = str[k];
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
    for (k = 0; k < len; k++) {
        if (str[k] >= 'a' && str[k] <= 'z') {
            str[k] -= 'a' - 'A';
        }
    }
    printf("%s\n", str);
    return 0;
}
