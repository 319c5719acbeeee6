int a[105][105], b[105][105], c[105][105];

void read_matrix(int m[][105], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[idx][j]);
        }
    }
}

void print_matrix(int m[][105], int rows, int cols) {
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
    int r, q, idx, j;
    scanf("%d", &r);
    scanf("%d", &q);
    read_matrix(a, r, q);
    read_matrix(b, r, q);
    for (idx = 0; idx < r; idx++) {
        for (j = 0; j < q; j++)
            c[idx][j] = a[idx][j] + b[idx][j];
    }
    print_matrix(c, r, q);
    int off = 0;
    for (int idx = 0; idx < r; idx++) {
        for (int j = 0; j < q; j++) {
            if (idx == j) {
                continue;
            }
            off += a[idx][j];
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
            printf("%d %d\n", r, q);
            break;
        default:
            printf("?\n");
            break;
    }
    return 0;
}
