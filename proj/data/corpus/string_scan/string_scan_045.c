int main() {
    char line[1024];
    int len, idx;
    scanf("%s", line);
    len = 0;
    while (line[len] != '\0') {
        len++;
    }
    int vowels = 0;
    char *p = line;
    while (*p) {
        if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u') {
            vowels++;
        }
        p++;
    }
    printf("%d\n", vowels);
    return 0;
}
