void read_matrix(int m[][100], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        j = 0;
        while (j < cols) {
            scanf("%d", &m[i][j]);
            j++;
        }
    }
}

int main() {
    int a[100][100], b[100][100], c[100][100];
    int n, q, i, j;
    scanf("%d", &n);
    scanf("%d", &q);
    read_matrix(a, n, q);
    read_matrix(b, n, q);
    i = 0;
    while (i < n) {
        for (j = 0; j < q; j++) {
            c[i][j] = a[i][j] + b[i][j];
        }
        i++;
    }
    for (i = 0; i < n; i++) {
        for (j = 0; j < q; j++) {
            printf("%d ", c[i][j]);
        }
        printf("\n");
    }
    return 0;
}
