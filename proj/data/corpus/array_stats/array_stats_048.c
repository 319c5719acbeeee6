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

int total(int x[], int count) {
    int s = 0;
    for (int idx = 0; idx < count; idx++)
        s += x[idx];
    return s;
}

int largest(int *x, int count) {
    int best = x[0];
    for (int idx = 1; idx < count; idx++)
        best = max2(best, x[idx]);
    return best;
}

int main() {
    int x[10000];
    int count, sum = 0, mx, mn;
    count = read_int();
    for (int idx = 0; idx < count; idx++)
        x[idx] = read_int();
    sum = total(x, count);
    mx = mn = x[0];
    for (int idx = 0; idx < count; idx++) {
        mx = x[idx] > mx ? x[idx] : mx;
        mn = x[idx] < mn ? x[idx] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int positive = 0;
    for (int idx = 0; idx < count; idx++) {
        if (x[idx] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    target = read_int();
    for (int idx = 0; idx < count; idx++) {
        if (x[idx] == target) {
            where = idx;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
