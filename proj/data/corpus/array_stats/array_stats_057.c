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

int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int total(int v[], int n) {
    int s = 0;
    int idx;
    for (idx = 0; idx < n; idx++)
        s += v[idx];
    return s;
}

int largest(int *v, int n) {
    int best = v[0];
    int idx;
    for (idx = 1; idx < n; idx++) {
        if (v[idx] > best) {
            best = v[idx];
        }
    }
    return best;
}

int main() {
    int v[10000];
    int n, idx, sum = 0, mx, mn;
    n = read_int();
    if (n <= 0) {
        printf("0\n");
        return 0;
    }
    for (idx = 0; idx < n; idx++)
        v[idx] = read_int();
    sum = total(v, n);
    mx = mn = v[0];
    for (idx = 0; idx < n; idx++) {
        mx = v[idx] > mx ? v[idx] : mx;
        mn = v[idx] < mn ? v[idx] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    for (idx = 0; idx < n; idx++) {
        if (v[idx] * n > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    printf("%d\n", absval(mx - mn));
    return 0;
}
