int max2(int p, int q) {
    return p > q ? p : q;
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

int main(void) {
    char str[256];
    int len, i;
    scanf("%s", str);
    len = 0;
    while (str[len] != '\0') {
        len++;
    }
    int state = 0;
    int words = 0;
    for (i = 0; i < len; i++) {
        if (str[i] == ' ' || str[i] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    printf("%d\n", max2(len, 0));
    return 0;
}
