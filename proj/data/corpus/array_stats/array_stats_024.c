int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int x[1000];
    int n, sum = 0, mx, mn;
    scanf("%d", &n);
    for (int idx = 0; idx < n; idx++) {
        scanf("%d", &x[idx]);
    }
    mx = mn = x[0];
    for (int idx = 0; idx < n; idx++) {
        sum += x[idx];
        if (x[idx] > mx) {
            mx = x[idx];
        }
        if (x[idx] < mn) {
            mn = x[idx];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    for (int idx = 0; idx < n - 1; idx++) {
        int best = idx;
        for (int j = idx + 1; j < n; j++) {
            if (x[j] < x[best]) {
                best = j;
            }
        }
        if (best != idx) {
            int t = x[best];
            x[best] = x[idx];
            x[idx] = t;
        }
    }
    printf("%d\n", x[n / 2]);
    int above = 0;
    for (int idx = 0; idx < n; idx++) {
        if (x[idx] * n > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
