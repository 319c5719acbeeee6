int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int a[105];
    int len, k, sum = 0, mx, mn;
    scanf("%d", &len);
    for (k = 0; k < len; k++) {
        scanf("%d", &a[k]);
    }
    mx = mn = a[0];
    for (k = 0; k < len; k++) {
        sum += a[k];
        if (a[k] > mx) {
            mx = a[k];
        }
        if (a[k] < mn) {
            mn = a[k];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    return 0;
}
