void print_matrix(int m[][10], int rows, int cols) {
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
    int a[10][10], b[10][10], c[10][10];
    int n, cols;
    int p;
    scanf("%d %d %d", &n, &cols, &p);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (int i = 0; i < cols; i++) {
        for (int j = 0; j < p; j++) {
            scanf("%d", &b[i][j]);
        }
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < p; j++) {
            c[i][j] = 0;
            for (int k = 0; k < cols; k++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    print_matrix(c, n, p);
    return 0;
}
