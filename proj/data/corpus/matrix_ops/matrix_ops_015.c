int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

enum { MAXN = 100 };

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN];
    int rows, m;
    scanf("%d", &rows);
    m = rows;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < rows; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    int d1 = 0, d2 = 0;
    for (int i = 0; i < rows; i++) {
        d1 += a[i][i];
        d2 += a[i][rows - 1 - i];
    }
    printf("%d %d\n", d1, d2);
    int off = 0;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < m; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    printf("%d\n", absval(rows - m));
    return 0;
}
