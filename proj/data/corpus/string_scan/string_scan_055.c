int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

enum state { OUTSIDE, INSIDE };

int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char line[1000];
    int len, k;
    scanf("%s", line);
    len = length(line);
    int vowels = 0;
    k = 0;
    while (k < len) {
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
        k++;
    }
    printf("%d\n", vowels);
    printf("%d\n", absval(len));
    return 0;
}
