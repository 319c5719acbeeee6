int max2(int p, int q) {
    return p > q ? p : q;
}

int total(int x[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++)
        s += x[i];
    return s;
}

int largest(int *x, int n) {
    int best = x[0];
    for (int i = 1; i < n; i++) {
        best = max2(best, x[i]);
    }
    return best;
}

int main(void) {
    int x[10000];
    int n, sum = 0, mx, mn;
    scanf("%d", &n);
    if (n <= 0) {
        printf("0\n");
        return 0;
    }
    for (int i = 0; i < n; i++) {
        scanf("%d", &x[i]);
    }
    sum = total(x, n);
    mx = mn = x[0];
    for (int i = 0; i < n; i++) {
        mx = x[i] > mx ? x[i] : mx;
        mn = x[i] < mn ? x[i] : mn;
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    for (int i = 0; i < n - 1; i++) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
            if (x[j] < x[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = x[best];
            x[best] = x[i];
            x[i] = t;
        }
    }
    printf("%d\n", x[n / 2]);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (x[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
