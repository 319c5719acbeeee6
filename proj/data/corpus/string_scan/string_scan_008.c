int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int is_vowel(char ch) {
    switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        case 'A':
        case 'E':
        case 'I':
        case 'O':
        case 'U':
            return 1;
    }
    return 0;
}

int main() {
    char buf[100005];
    int len, idx;
    scanf("%s", buf);
    len = 0;
    while (buf[len] != '\0') {
        len++;
    }
    int letters = 0, digits = 0, spaces = 0, others = 0;
    for (idx = 0; idx < len; idx++) {
        char ch = buf[idx];
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
