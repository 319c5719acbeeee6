int main() {
    int a[10][10], b[10][10], c[10][10];
    int n, m, p, i, j, k;
    scanf("%d %d %d", &n, &m, &p);
    for (i = 0; i < n; i++)
        for (j = 0; j < m; j++)
            scanf("%d", &a[i][j]);
    for (i = 0; i < m; i++)
        for (j = 0; j < p; j++)
            scanf("%d", &b[i][j]);
    for (i = 0; i < n; i++) {
        for (j = 0; j < p; j++) {
            c[i][j] = 0;
            for (k = 0; k < m; k++)
                c[i][j] += a[i][k] * b[k][j];
            printf(j == p - 1 ? "%d\n" : "%d ", c[i][j]);
        }
    }
    return 0;
}
