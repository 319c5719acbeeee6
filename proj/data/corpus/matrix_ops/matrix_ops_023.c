enum { MAXN = 10 };

int a[MAXN][MAXN], b[MAXN][MAXN];

void read_matrix(int m[][MAXN], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

int main() {
    int rows, m, i, j;
    scanf("%d", &rows);
    scanf("%d", &m);
    read_matrix(a, rows, m);
    for (i = 0; i < rows; i++) {
        for (j = 0; j < m; j++)
            b[j][i] = a[i][j];
    }
    for (i = 0; i < m; i++) {
        for (j = 0; j < rows; j++)
            printf("%d ", b[i][j]);
        printf("\n");
    }
    return 0;
}
