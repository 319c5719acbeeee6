int main() {
    char s[256];
    int len, idx;
    scanf("%s", s);
    len = 0;
    while (s[len] != '\0') {
        len++;
    }
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (idx = 0; idx < len; idx++) {
        char ch = s[idx];
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
    for (idx = 0; idx < len; idx++) {
        if (s[idx] >= 'a' && s[idx] <= 'z') {
            s[idx] -= 'a' - 'A';
        }
    }
    printf("%s\n", s);
    return 0;
}
