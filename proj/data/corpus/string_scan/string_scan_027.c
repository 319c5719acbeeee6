int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main(void) {
    char str[256];
    int len = 0, i;
    do {
        str[len] = getchar();
    } while (str[len++] != '\n');
    str[--len] = 0;
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (i = 0; i < len; i++) {
        char ch = str[i];
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
    for (i = 0; i < len; i++) {
        if (str[i] >= 'a' && str[i] <= 'z') {
            str[i] -= 'a' - 'A';
        }
    }
    printf("%s\n", str);
    return 0;
}
