int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int a[105][105], b[105][105], c[105][105];

void read_matrix(int m[][105], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++)
            scanf("%d", &m[i][j]);
    }
}

int main() {
    int r, m, i, j;
    scanf("%d", &r);
    scanf("%d", &m);
    read_matrix(a, r, m);
    read_matrix(b, r, m);
    for (i = 0; i < r; i++) {
        for (j = 0; j < m; j++)
            c[i][j] = a[i][j] + b[i][j];
    }
    for (i = 0; i < r; i++) {
        for (j = 0; j < m; j++)
            printf("%d ", c[i][j]);
        printf("\n");
    }
    int off = 0;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < m; j++) {
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
            printf("%d %d\n", r, m);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    printf("%d\n", absval(r - m));
    return 0;
}
