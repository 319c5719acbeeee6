int total(int a[], int n) {
    int s = 0;
    int k;
    for (k = 0; k < n; k++) {
        s += a[k];
    }
    return s;
}

int largest(int *a, int n) {
    int best = a[0];
    int k;
    for (k = 1; k < n; k++) {
        if (a[k] > best) {
            best = a[k];
        }
    }
    return best;
}

int main() {
    int a[100];
    int n, k, sum = 0, mx, mn;
    scanf("%d", &n);
    for (k = 0; k < n; k++) {
        scanf("%d", &a[k]);
    }
    sum = total(a, n);
    mx = mn = a[0];
    for (k = 0; k < n; k++) {
        if (a[k] > mx) {
            mx = a[k];
        }
        if (a[k] < mn) {
            mn = a[k];
        }
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
