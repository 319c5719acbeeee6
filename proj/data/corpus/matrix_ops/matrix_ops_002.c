void print_matrix(int m[][10], int rows, int cols) {
    int i, j;
    i = 0;
    while (i < rows) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
        i++;
    }
}

int main() {
    int a[10][10], b[10][10], c[10][10];
    int rows, q, i, j;
    scanf("%d", &rows);
    scanf("%d", &q);
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < q) {
            scanf("%d", &a[i][j]);
            j++;
        }
    }
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < q) {
            scanf("%d", &b[i][j]);
            j++;
        }
    }
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < q) {
            c[i][j] = a[i][j] + b[i][j];
            j++;
        }
    }
    print_matrix(c, rows, q);
    int off = 0;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < q; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    return 0;
}
