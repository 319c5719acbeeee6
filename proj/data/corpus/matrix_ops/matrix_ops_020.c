void print_matrix(int m[][105], int rows, int cols) {
    int k, j;
    for (k = 0; k < rows; k++) {
        j = 0;
        while (j < cols) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
            j++;
        }
        putchar('\n');
    }
}

int main() {
    int a[105][105], b[105][105];
    int n, cols, k, j;
    scanf("%d", &n);
    cols = n;
    k = 0;
    while (k < n) {
        j = 0;
        while (j < n) {
            scanf("%d", &a[k][j]);
            j++;
        }
        k++;
    }
    int d1 = 0, d2 = 0;
    for (k = 0; k < n; k++) {
        d1 += a[k][k];
        d2 += a[k][n - 1 - k];
    }
    printf("%d %d\n", d1, d2);
    int off = 0;
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < cols; j++) {
            if (k == j) {
                continue;
            }
            off += a[k][j];
        }
    }
    printf("%d\n", off);
    return 0;
}
