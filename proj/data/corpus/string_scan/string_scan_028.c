enum state { OUTSIDE, INSIDE };

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
    int cnt[26] = {0};
    int best = 0;
    k = 0;
    while (k < len) {
        if (str[k] >= 'a' && str[k] <= 'z') {
            cnt[str[k] - 'a']++;
        }
        k++;
    }
    k = 1;
    while (k < 26) {
        if (cnt[k] > cnt[best]) {
            best = k;
        }
        k++;
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    return 0;
}
