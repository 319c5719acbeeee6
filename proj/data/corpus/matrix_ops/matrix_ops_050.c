enum { MAXN = 10 };

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];
    int n, m, idx, j;
    scanf("%d", &n);
    scanf("%d", &m);
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++)
            scanf("%d", &a[idx][j]);
    }
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++)
            scanf("%d", &b[idx][j]);
    }
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++) {
            c[idx][j] = a[idx][j] + b[idx][j];
        }
    }
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++)
            printf("%d ", c[idx][j]);
        printf("\n");
    }
    int off = 0;
    for (int idx = 0; idx < n; idx++) {
        for (int j = 0; j < m; j++) {
            if (idx == j) {
                continue;
            }
            off += a[idx][j];
        }
    }
    printf("%d\n", off);
    int zi = -1, zj = -1;
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++) {
            if (a[idx][j] == 0) {
                zi = idx;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    return 0;
}
