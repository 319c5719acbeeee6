int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

void print_matrix(int m[][100], int rows, int cols) {
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
    int a[100][100], b[100][100], c[100][100];
    int n, q;
    scanf("%d", &n);
    scanf("%d", &q);
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < q; j++)
            scanf("%d", &a[k][j]);
    }
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < q; j++)
            scanf("%d", &b[k][j]);
    }
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < q; j++) {
            c[k][j] = a[k][j] + b[k][j];
        }
    }
    print_matrix(c, n, q);
    printf("%d\n", absval(n - q));
    return 0;
}
