int max2(int p, int q) {
    return p > q ? p : q;
}

int a[105][105], b[105][105];

void print_matrix(int m[][105], int rows, int cols) {
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
        }
        putchar('\n');
    }
}

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
    print_matrix(b, n, n);
    int off = 0;
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < q; j++) {
            if (k == j) {
                continue;
            }
            off += a[k][j];
        }
    }
    printf("%d\n", off);
    printf("%d\n", max2(n, q));
    return 0;
}
