int max2(int p, int q) {
    return p > q ? p : q;
}

int a[100][100], b[100][100];

int main() {
    int n, cols, k, j;
    scanf("%d", &n);
    cols = n;
    for (k = 0; k < n; k++) {
        for (j = 0; j < n; j++) {
            scanf("%d", &a[k][j]);
        }
    }
    int d1 = 0, d2 = 0;
    for (k = 0; k < n; k++) {
        d1 += a[k][k];
        d2 += a[k][n - 1 - k];
    }
    printf("%d %d\n", d1, d2);
    for (k = 0; k < n; k++) {
        for (j = 0; j < n; j++) {
            b[k][j] = a[j][k];
        }
    }
    for (k = 0; k < n; k++) {
        for (j = 0; j < n; j++) {
            printf("%d ", b[k][j]);
        }
        printf("\n");
    }
    int zi = -1, zj = -1;
    for (k = 0; k < n; k++) {
        for (j = 0; j < cols; j++) {
            if (a[k][j] == 0) {
                zi = k;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    printf("%d\n", max2(n, cols));
    return 0;
}
