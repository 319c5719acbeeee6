int main() {
    char text[256];
    int len = 0;
    do {
        text[len] = getchar();
    } while (text[len++] != '\n');
    text[--len] = 0;
    int vowels = 0;
    for (int idx = 0; idx < len; idx++) {
        switch (text[idx]) {
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
