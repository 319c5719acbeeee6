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
    int a[20][20], b[20][20];
    int rows, cols, i, j;
    scanf("%d", &rows);
    scanf("%d", &cols);
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (i = 0; i < rows; i++) {
        int s = 0;
        for (j = 0; j < cols; j++) {
            s += a[i][j];
        }
        printf("%d\n", s);
    }
    for (j = 0; j < cols; j++) {
        int best = a[0][j];
        for (i = 1; i < rows; i++) {
            if (a[i][j] > best) {
                best = a[i][j];
            }
        }
        printf("%d ", best);
    }
    return 0;
}
