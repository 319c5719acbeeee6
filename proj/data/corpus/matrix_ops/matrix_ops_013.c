enum { MAXN = 105 };

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];
    int rows, m, i, j, k;
    int p;
    scanf("%d %d %d", &rows, &m, &p);
    for (i = 0; i < rows; i++) {
        for (j = 0; j < m; j++)
            scanf("%d", &a[i][j]);
    }
    for (i = 0; i < m; i++) {
        for (j = 0; j < p; j++)
            scanf("%d", &b[i][j]);
    }
    for (i = 0; i < rows; i++) {
        for (j = 0; j < p; j++) {
            c[i][j] = 0;
            for (k = 0; k < m; k++)
                c[i][j] += a[i][k] * b[k][j];
        }
    }
    for (i = 0; i < rows; i++) {
        for (j = 0; j < p; j++)
            printf("%d ", c[i][j]);
        printf("\n");
    }
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, m);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
