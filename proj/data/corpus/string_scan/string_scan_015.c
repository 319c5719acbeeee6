int main(void) {
    char line[1024];
    int len;
    scanf("%s", line);
    len = 0;
    while (line[len] != '\0') {
        len++;
    }
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
