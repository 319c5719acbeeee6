int main(void) {
    char buf[1024];
    int len = 0, idx;
    do {
        buf[len] = getchar();
    } while (buf[len++] != '\n');
    buf[--len] = 0;
    int vowels = 0;
    char *p = buf;
    while (*p) {
        if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u') {
            vowels++;
        }
        p++;
    }
    printf("%d\n", vowels);
    return 0;
}
