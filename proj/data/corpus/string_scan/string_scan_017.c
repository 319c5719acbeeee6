int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char line[1000];
    int len = 0;
    do {
        line[len] = getchar();
    } while (line[len++] != '\n');
    line[--len] = 0;
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
