int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main(void) {
    char text[256];
    int len;
    scanf("%s", text);
    len = 0;
    while (text[len] != '\0') {
        len++;
    }
    int vowels = 0;
    char *p = text;
    while (*p) {
        if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u') {
            vowels++;
        }
        p++;
    }
    printf("%d\n", vowels);
    printf("%d\n", absval(len));
    return 0;
}
