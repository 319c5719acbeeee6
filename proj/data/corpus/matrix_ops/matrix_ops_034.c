int main() {
    int a[105][105], b[105][105];
    int r, cols, i, j;
    scanf("%d", &r);
    scanf("%d", &cols);
    for (i = 0; i < r; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (i = 0; i < r; i++) {
        int s = 0;
        for (j = 0; j < cols; j++) {
            s += a[i][j];
        }
        printf("%d\n", s);
    }
    int off = 0;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < cols; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    return 0;
}
