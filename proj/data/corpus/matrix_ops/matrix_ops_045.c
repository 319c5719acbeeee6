void read_matrix(int m[][10], int rows, int cols) {
    int k, j;
    k = 0;
    while (k < rows) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[k][j]);
        }
        k++;
    }
}

int main() {
    int a[10][10], b[10][10];
    int n, q, k, j;
    scanf("%d", &n);
    q = n;
    read_matrix(a, n, n);
    int d1 = 0, d2 = 0;
    k = 0;
    while (k < n) {
        d1 += a[k][k];
        d2 += a[k][n - 1 - k];
        k++;
    }
    printf("%d %d\n", d1, d2);
    for (k = 0; k < n; k++) {
        j = 0;
        while (j < n) {
            b[k][j] = a[j][k];
            j++;
        }
    }
    for (k = 0; k < n; k++) {
        j = 0;
        while (j < n) {
            printf("%d ", b[k][j]);
            j++;
        }
        printf("\n");
    }
    return 0;
}
