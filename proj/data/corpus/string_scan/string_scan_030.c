int main() {
    char s[1024];
    int len, idx;
    scanf("%s", s);
    len = 0;
    while (s[len] != '\0') {
        len++;
    }
    int cnt[26] = {0};
    int best = 0;
    for (int idx = 0; idx < len; idx++) {
        if (s[idx] < 'a' || s[idx] > 'z') {
            continue;
        }
        cnt[s[idx] - 'a']++;
    }
    for (idx = 1; idx < 26; idx++) {
        if (cnt[idx] > cnt[best]) {
            best = idx;
        }
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    for (idx = 0; idx < len; idx++) {
        if (s[idx] >= 'a' && s[idx] <= 'z') {
            s[idx] -= 'a' - 'A';
        }
    }
    printf("%s\n", s);
    return 0;
}
