int max2(int p, int q) {
    return p > q ? p : q;
}

int total(int a[], int n) {
    int s = 0;
    int *p = a;
    while (p < a + n) {
        s += *p++;
    }
    return s;
}

int largest(int *a, int n) {
    int best = a[0];
    for (int i = 1; i < n; i++)
        best = max2(best, a[i]);
    return best;
}

int main(void) {
    int a[105];
    int n, sum = 0, mx, mn;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        scanf("%d", &a[i]);
    sum = total(a, n);
    mx = mn = a[0];
    for (int i = 0; i < n; i++) {
        if (a[i] > mx) {
            mx = a[i];
        }
        if (a[i] < mn) {
            mn = a[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] * n > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
