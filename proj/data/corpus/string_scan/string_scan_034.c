int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    char line[1024];
    int len = 0, k;
    do {
        line[len] = getchar();
    } while (line[len++] != '\n');
    line[--len] = 0;
    int cnt[26] = {0};
    int best = 0;
    for (int k = 0; k < len; k++) {
        if (line[k] < 'a' || line[k] > 'z') {
            continue;
        }
        cnt[line[k] - 'a']++;
    }
    for (k = 1; k < 26; k++) {
        if (cnt[k] > cnt[best]) {
            best = k;
        }
    }
    printf("%c %d\n", 'a' + best, cnt[best]);
    printf("%d\n", absval(len));
    return 0;
}
