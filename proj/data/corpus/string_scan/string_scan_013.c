int main() {
    char line[1024];
    int len;
    scanf("%s", line);
    len = 0;
    while (line[len] != '\0') {
        len++;
    }
    int vowels = 0;
    for (int k = 0; k < len; k++) {
        switch (line[k]) {
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
    return 0;
}
