int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    char str[100005];
    int len = 0;
    while (1) {
        int ch = getchar();
        if (ch == '\n' || ch == -1) {
            break;
        }
        str[len++] = (char)ch;
    }
    str[len] = '\0';
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (int i = 0; i < len; i++) {
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
    printf("%d\n", absval(len));
    return 0;
}
