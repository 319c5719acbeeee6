void print_matrix(int m[][100], int rows, int cols) {
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
    int a[100][100], b[100][100];
    int rows, q, i, j;
    scanf("%d", &rows);
    scanf("%d", &q);
    for (i = 0; i < rows; i++) {
        for (j = 0; j < q; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (i = 0; i < rows; i++) {
        int s = 0;
        for (j = 0; j < q; j++) {
            s += a[i][j];
        }
        printf("%d\n", s);
    }
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
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, q);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
