void print_matrix(int m[][105], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[105][105], b[105][105];
    int n, cols;
    scanf("%d", &n);
    scanf("%d", &cols);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++)
            b[j][i] = a[i][j];
    }
    print_matrix(b, cols, n);
    int off = 0;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    return 0;
}
