int main() {
    char s[100005];
    int len = 0;
    do {
        s[len] = getchar();
    } while (s[len++] != '\n');
    s[--len] = 0;
    int cnt[26] = {0};
    int best = 0;
    for (int k = 0; k < len; k++) {
        if (s[k] < 'a' || s[k] > 'z') {
            continue;
        }
        cnt[s[k] - 'a']++;
    }
    for (int k = 1; k < 26; k++) {
        if (cnt[k] > cnt[best]) {
            best = k;
        }
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    for (int k = 0; k < len; k++) {
        if (s[k] >= 'a' && s[k] <= 'z') {
            s[k] -= 'a' - 'A';
        }
    }
    printf("%s\n", s);
    return 0;
}
