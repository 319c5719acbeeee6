enum { MAXN = 10 };

int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];

void print_matrix(int m[][MAXN], int rows, int cols) {
    int idx, j;
    idx = 0;
    while (idx < rows) {
        j = 0;
        while (j < cols) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[idx][j]);
            j++;
        }
        putchar('\n');
        idx++;
    }
}

int main() {
    int rows, q, idx, j;
    scanf("%d", &rows);
    scanf("%d", &q);
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < q; j++) {
            scanf("%d", &a[idx][j]);
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        j = 0;
        while (j < q) {
            scanf("%d", &b[idx][j]);
            j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < q; j++) {
            c[idx][j] = a[idx][j] + b[idx][j];
        }
        idx++;
    }
    print_matrix(c, rows, q);
    int off = 0;
    for (int idx = 0; idx < rows; idx++) {
        for (int j = 0; j < q; j++) {
            if (idx == j) {
                continue;
            }
            off += a[idx][j];
        }
    }
    printf("%d\n", off);
    return 0;
}
