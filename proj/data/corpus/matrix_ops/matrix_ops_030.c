int max2(int p, int q) {
    return p > q ? p : q;
}

void print_matrix(int m[][105], int rows, int cols) {
    int k, j;
    for (k = 0; k < rows; k++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[105][105], b[105][105];
    int rows, m, k, j;
    scanf("%d", &rows);
    scanf("%d", &m);
    for (k = 0; k < rows; k++) {
        for (j = 0; j < m; j++) {
            scanf("%d", &a[k][j]);
        }
    }
    for (k = 0; k < rows; k++) {
        for (j = 0; j < m; j++) {
            b[j][k] = a[k][j];
        }
    }
    print_matrix(b, m, rows);
    int zi = -1, zj = -1;
    for (k = 0; k < rows; k++) {
        for (j = 0; j < m; j++) {
            if (a[k][j] == 0) {
                zi = k;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    printf("%d\n", max2(rows, m));
    return 0;
}
