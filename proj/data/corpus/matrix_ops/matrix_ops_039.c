void print_matrix(int m[][20], int rows, int cols) {
    for (int idx = 0; idx < rows; idx++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[idx][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[20][20], b[20][20], c[20][20];
    int n, cols;
    scanf("%d", &n);
    scanf("%d", &cols);
    for (int idx = 0; idx < n; idx++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &a[idx][j]);
        }
    }
    for (int idx = 0; idx < n; idx++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &b[idx][j]);
        }
    }
    for (int idx = 0; idx < n; idx++) {
        for (int j = 0; j < cols; j++) {
            c[idx][j] = a[idx][j] + b[idx][j];
        }
    }
    print_matrix(c, n, cols);
    return 0;
}
