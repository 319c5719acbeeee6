enum state { OUTSIDE, INSIDE };

int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char str[1000];
    int len = 0, i;
    do {
        str[len] = getchar();
    } while (str[len++] != '\n');
    str[--len] = 0;
    int cnt[26] = {0};
    int best = 0;
    for (i = 0; i < len; i++) {
        if (str[i] >= 'a' && str[i] <= 'z') {
            cnt[str[i] - 'a']++;
        }
    }
    for (i = 1; i < 26; i++) {
        if (cnt[i] > cnt[best]) {
            best = i;
        }
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    return 0;
}
