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

int main() {
    int a[105][105], b[105][105];
    int n, q, i, j;
    n = read_int();
    q = read_int();
    for (i = 0; i < n; i++) {
        for (j = 0; j < q; j++)
            a[i][j] = read_int();
    }
    i = 0;
    while (i < n) {
        int s = 0;
        for (j = 0; j < q; j++) {
            s += a[i][j];
        }
        printf("%d\n", s);
        i++;
    }
    j = 0;
    while (j < q) {
        int best = a[0][j];
        i = 1;
        while (i < n) {
            if (a[i][j] > best) {
                best = a[i][j];
            }
            i++;
        }
        printf("%d ", best);
        j++;
    }
    return 0;
}
