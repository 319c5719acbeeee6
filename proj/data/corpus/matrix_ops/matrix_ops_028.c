enum { MAXN = 105 };

int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];

void read_matrix(int m[][MAXN], int rows, int cols) {
    int k, j;
    for (k = 0; k < rows; k++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[k][j]);
        }
    }
}

int main() {
    int n, q, k, j, t;
    int p;
    scanf("%d %d %d", &n, &q, &p);
    read_matrix(a, n, q);
    read_matrix(b, q, p);
    for (k = 0; k < n; k++) {
        for (j = 0; j < p; j++) {
            c[k][j] = 0;
            for (t = 0; t < q; t++) {
                c[k][j] += a[k][t] * b[t][j];
            }
        }
    }
    for (k = 0; k < n; k++) {
        for (j = 0; j < p; j++) {
            printf("%d ", c[k][j]);
        }
        printf("\n");
    }
    return 0;
}
