int main() {
    int a[105][105], b[105][105];
    int rows, q, k, j;
    scanf("%d", &rows);
    q = rows;
    for (k = 0; k < rows; k++) {
        j = 0;
        while (j < rows) {
            scanf("%d", &a[k][j]);
            j++;
        }
    }
    int d1 = 0, d2 = 0;
    for (k = 0; k < rows; k++) {
        d1 += a[k][k];
        d2 += a[k][rows - 1 - k];
    }
    printf("%d %d\n", d1, d2);
    for (k = 0; k < rows; k++) {
        for (j = 0; j < rows; j++)
            b[k][j] = a[j][k];
    }
    for (k = 0; k < rows; k++) {
        for (j = 0; j < rows; j++)
            printf("%d ", b[k][j]);
        printf("\n");
    }
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, q);
            break;
        default:
            printf("?\n");
            break;
    }
    return 0;
}
