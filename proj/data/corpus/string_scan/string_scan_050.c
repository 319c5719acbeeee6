int main() {
    char s[100005];
    int len = 0, idx;
    do {
        s[len] = getchar();
    } while (s[len++] != '\n');
    s[--len] = 0;
    int cnt[26] = {0};
    int best = 0;
    for (int idx = 0; idx < len; idx++) {
        if (s[idx] < 'a' || s[idx] > 'z') {
            continue;
        }
        cnt[s[idx] - 'a']++;
    }
    idx = 1;
    while (idx < 26) {
        if (cnt[idx] > cnt[best]) {
            best = idx;
        }
        idx++;
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    return 0;
}
