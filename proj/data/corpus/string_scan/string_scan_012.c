enum state { OUTSIDE, INSIDE };

int main() {
    char text[1024];
    int len = 0, k;
    do {
        text[len] = getchar();
    } while (text[len++] != '\n');
    text[--len] = 0;
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
