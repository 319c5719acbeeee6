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
    char str[100005];
    int len = 0, k;
    while (1) {
        int ch = getchar();
        if (ch == '\n' || ch == -1) {
            break;
        }
        str[len++] = (char)ch;
    }
    str[len] = '\0';
    int vowels = 0;
    for (k = 0; k < len; k++) {
        if (is_vowel(str[k])) {
            vowels++;
        }
    }
    printf("%d\n", vowels);
    printf("%d\n", absval(len));
    return 0;
}
