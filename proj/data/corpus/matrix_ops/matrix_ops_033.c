void read_matrix(int m[][10], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

void print_matrix(int m[][10], int rows, int cols) {
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
    int a[10][10], b[10][10];
    int n, cols, i, j;
    scanf("%d", &n);
    cols = n;
    read_matrix(a, n, n);
    int d1 = 0, d2 = 0;
    for (i = 0; i < n; i++) {
        d1 += a[i][i];
        d2 += a[i][n - 1 - i];
    }
    printf("%d %d\n", d1, d2);
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", n, cols);
            break;
        default:
            printf("?\n");
            break;
    }
    int zi = -1, zj = -1;
    for (i = 0; i < n; i++) {
        for (j = 0; j < cols; j++) {
            if (a[i][j] == 0) {
                zi = i;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    return 0;
}
