int main() {
    char line[1000];
    int len = 0;
    while (1) {
        int ch = getchar();
        if (ch == '\n' || ch == -1) {
            break;
        }
        line[len++] = (char)ch;
    }
    line[len] = '\0';
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
    for (int i = 0; i < len; i++) {
        if (line[i] >= 'a' && line[i] <= 'z') {
            line[i] -= 'a' - 'A';
        }
    }
    printf("%s\n", line);
    return 0;
}
