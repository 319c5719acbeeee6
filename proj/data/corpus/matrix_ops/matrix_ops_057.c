int max2(int p, int q) {
    return p > q ? p : q;
}

enum { MAXN = 105 };

int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];

void read_matrix(int m[][MAXN], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

int main() {
    int r, cols, i, j;
    scanf("%d", &r);
    scanf("%d", &cols);
    read_matrix(a, r, cols);
    read_matrix(b, r, cols);
    for (i = 0; i < r; i++) {
        for (j = 0; j < cols; j++) {
            c[i][j] = a[i][j] + b[i][j];
        }
    }
    for (i = 0; i < r; i++) {
        for (j = 0; j < cols; j++) {
            printf("%d ", c[i][j]);
        }
        printf("\n");
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
    printf("%d\n", max2(r, cols));
    return 0;
}
