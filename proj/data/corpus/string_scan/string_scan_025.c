int is_vowel(char ch) {
    return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';
}

int main() {
    char line[256];
    int len = 0, idx;
    do {
        line[len] = getchar();
    } while (line[len++] != '\n');
    line[--len] = 0;
    int ok = 1;
    int lo = 0, hi = len - 1;
    while (lo < hi) {
        if (line[lo] != line[hi]) {
            ok = 0;
            break;
        }
        lo++;
        hi--;
    }
    puts(ok ? "yes" : "no");
    return 0;
}
