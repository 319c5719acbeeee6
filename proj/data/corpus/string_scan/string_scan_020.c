int main(void) {
    char text[100005];
    int len;
    scanf("%s", text);
    len = 0;
    while (text[len] != '\0') {
        len++;
    }
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
