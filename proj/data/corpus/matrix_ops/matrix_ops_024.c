void print_matrix(int m[][10], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[idx][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[10][10], b[10][10];
    int r, m, idx, j;
    scanf("%d", &r);
    m = r;
    for (idx = 0; idx < r; idx++) {
        for (j = 0; j < r; j++) {
            scanf("%d", &a[idx][j]);
        }
    }
    int d1 = 0, d2 = 0;
    for (idx = 0; idx < r; idx++) {
        d1 += a[idx][idx];
        d2 += a[idx][r - 1 - idx];
    }
    printf("%d %d\n", d1, d2);
    for (idx = 0; idx < r; idx++) {
        for (j = 0; j < r; j++) {
            b[idx][j] = a[j][idx];
        }
    }
    print_matrix(b, r, r);
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", r, m);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
