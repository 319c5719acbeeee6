int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    char text[256];
    int len, k;
    scanf("%s", text);
    len = 0;
    while (text[len] != '\0') {
        len++;
    }
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (k = 0; k < len; k++) {
        char ch = text[k];
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
