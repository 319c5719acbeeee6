int max2(int p, int q) {
    return p > q ? p : q;
}

void print_matrix(int m[][20], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[20][20], b[20][20], c[20][20];
    int rows, cols, i, j, k;
    int p;
    scanf("%d %d %d", &rows, &cols, &p);
    i = 0;
    while (i < rows) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
        i++;
    }
    for (i = 0; i < cols; i++) {
        for (j = 0; j < p; j++) {
            scanf("%d", &b[i][j]);
        }
    }
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < p) {
            c[i][j] = 0;
            for (k = 0; k < cols; k++) {
                c[i][j] += a[i][k] * b[k][j];
            }
            j++;
        }
    }
    print_matrix(c, rows, p);
    printf("%d\n", max2(rows, cols));
    return 0;
}
