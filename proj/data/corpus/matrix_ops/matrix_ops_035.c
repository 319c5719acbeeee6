enum { MAXN = 105 };

int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];

int main() {
    int rows, cols, k, j;
    scanf("%d", &rows);
    scanf("%d", &cols);
    for (k = 0; k < rows; k++) {
        j = 0;
        while (j < cols) {
            scanf("%d", &a[k][j]);
            j++;
        }
    }
    for (k = 0; k < rows; k++) {
        j = 0;
        while (j < cols) {
            scanf("%d", &b[k][j]);
            j++;
        }
    }
    for (k = 0; k < rows; k++) {
        for (j = 0; j < cols; j++) {
            c[k][j] = a[k][j] + b[k][j];
        }
    }
    k = 0;
    while (k < rows) {
        for (j = 0; j < cols; j++) {
            printf("%d ", c[k][j]);
        }
        printf("\n");
        k++;
    }
    int off = 0;
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++) {
            if (k == j) {
                continue;
            }
            off += a[k][j];
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
            printf("%d %d\n", rows, cols);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
