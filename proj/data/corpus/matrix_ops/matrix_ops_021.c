enum { MAXN = 100 };

void print_matrix(int m[][MAXN], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[idx][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN];
    int n, m, idx, j;
    scanf("%d", &n);
    scanf("%d", &m);
    for (idx = 0; idx < n; idx++) {
        for (j = 0; j < m; j++)
            scanf("%d", &a[idx][j]);
    }
    for (idx = 0; idx < n; idx++) {
        int s = 0;
        for (j = 0; j < m; j++)
            s += a[idx][j];
        printf("%d\n", s);
    }
    for (j = 0; j < m; j++) {
        int best = a[0][j];
        for (idx = 1; idx < n; idx++) {
            if (a[idx][j] > best) {
                best = a[idx][j];
            }
        }
        printf("%d ", best);
    }
    return 0;
}
