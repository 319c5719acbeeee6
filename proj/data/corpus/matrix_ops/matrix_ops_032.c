int main() {
    int a[105][105], b[105][105], c[105][105];
    int rows, q, i, j, k;
    int p;
    scanf("%d %d %d", &rows, &q, &p);
    for (i = 0; i < rows; i++) {
        for (j = 0; j < q; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (i = 0; i < q; i++) {
        for (j = 0; j < p; j++) {
            scanf("%d", &b[i][j]);
        }
    }
    for (i = 0; i < rows; i++) {
        for (j = 0; j < p; j++) {
            c[i][j] = 0;
            for (k = 0; k < q; k++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    for (i = 0; i < rows; i++) {
        for (j = 0; j < p; j++) {
            printf("%d ", c[i][j]);
        }
        printf("\n");
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
    int zi = -1, zj = -1;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < q; j++) {
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
