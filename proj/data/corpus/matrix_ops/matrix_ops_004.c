int a[105][105], b[105][105];

int main() {
    int n, q;
    scanf("%d", &n);
    q = n;
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < n; j++) {
            scanf("%d", &a[k][j]);
        }
    }
    int d1 = 0, d2 = 0;
    for (int k = 0; k < n; k++) {
        d1 += a[k][k];
        d2 += a[k][n - 1 - k];
    }
    printf("%d %d\n", d1, d2);
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < n; j++) {
            b[k][j] = a[j][k];
        }
    }
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < n; j++) {
            printf("%d ", b[k][j]);
        }
        printf("\n");
    }
    return 0;
}
