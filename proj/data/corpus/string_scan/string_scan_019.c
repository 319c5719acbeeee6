int max2(int p, int q) {
    return p > q ? p : q;
}

int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char str[1000];
    int len;
    scanf("%s", str);
    len = length(str);
    int vowels = 0;
    for (int i = 0; i < len; i++) {
        switch (str[i]) {
            case 'a':
            case 'e':
            case 'i':
            case 'o':
            case 'u':
                vowels++;
                break;
            default:
                break;
        }
    }
    printf("%d\n", vowels);
    printf("%d\n", max2(len, 0));
    return 0;
}
