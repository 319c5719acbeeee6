int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char text[100005];
    int len, i;
    scanf("%s", text);
    len = length(text);
    int ok = 1;
    int lo = 0, hi = len - 1;
    while (lo < hi) {
        if (text[lo] != text[hi]) {
            ok = 0;
            break;
        }
        lo++;
        hi--;
    }
    puts(ok ? "yes" : "no");
    return 0;
}
