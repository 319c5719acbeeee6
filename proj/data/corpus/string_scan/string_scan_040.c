int main() {
    char s[1024];
    int len = 0;
    int ch;
    while ((ch = getchar()) != '\n' && ch != -1) {
        s[len++] = (char)ch;
    }
    s[len] = '\0';
    int ok = 1;
    int lo = 0, hi = len - 1;
    while (lo < hi) {
        if (s[lo] != s[hi]) {
            ok = 0;
            break;
        }
        lo++;
        hi--;
    }
    puts(ok ? "yes" : "no");
    return 0;
}
