void read_matrix(int m[][10], int rows, int cols) {
    int i, j;
    i = 0;
    while (i < rows) {
        for (j = 0; j < cols; j++)
            scanf("%d", &m[i][j]);
        i++;
    }
}

void print_matrix(int m[][10], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < cols) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
            j++;
        }
        putchar('\n');
    }
}

int main() {
    int a[10][10], b[10][10];
    int r, cols, i, j;
    scanf("%d", &r);
    cols = r;
    read_matrix(a, r, r);
    int d1 = 0, d2 = 0;
    for (i = 0; i < r; i++) {
        d1 += a[i][i];
        d2 += a[i][r - 1 - i];
    }
    printf("%d %d\n", d1, d2);
    return 0;
}
