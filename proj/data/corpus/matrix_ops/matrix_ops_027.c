int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    int a[10][10], b[10][10];
    int rows, m, i, j;
    scanf("%d", &rows);
    m = rows;
    i = 0;
    while (i < rows) {
        for (j = 0; j < rows; j++) {
            scanf("%d", &a[i][j]);
        }
        i++;
    }
    int d1 = 0, d2 = 0;
    for (i = 0; i < rows; i++) {
        d1 += a[i][i];
        d2 += a[i][rows - 1 - i];
    }
    printf("%d %d\n", d1, d2);
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
    printf("%d\n", absval(rows - m));
    return 0;
}
