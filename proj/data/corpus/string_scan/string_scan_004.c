int main() {
    char str[100005];
    int len;
    scanf("%s", str);
    len = 0;
    while (str[len] != '\0') {
        len++;
    }
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (int idx = 0; idx < len; idx++) {
        char ch = str[idx];
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
    return 0;
}
