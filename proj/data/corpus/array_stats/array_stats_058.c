int read_int(void) {
    int c = getchar(), sign = 1, value = 0;
    while (c == ' ' || c == '\n' || c == '\t') {
        c = getchar();
    }
    if (c == '-') {
        sign = -1;
        c = getchar();
    }
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        c = getchar();
    }
    return sign * value;
}

int max2(int p, int q) {
    return p > q ? p : q;
}

int main(void) {
    int x[105];
    int len, k, sum = 0, mx, mn;
    len = read_int();
    for (k = 0; k < len; k++) {
        x[k] = read_int();
    }
    mx = mn = x[0];
    for (k = 0; k < len; k++) {
        sum += x[k];
        if (x[k] > mx) {
            mx = x[k];
        }
        if (x[k] < mn) {
            mn = x[k];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    return 0;
}
