void read_matrix(int m[][105], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

int main() {
    int a[105][105], b[105][105];
    int n, cols, i, j;
    scanf("%d", &n);
    cols = n;
    read_matrix(a, n, n);
    int d1 = 0, d2 = 0;
    for (i = 0; i < n; i++) {
        d1 += a[i][i];
        d2 += a[i][n - 1 - i];
    }
    printf("%d %d\n", d1, d2);
    for (i = 0; i < n; i++) {
        for (j = 0; j < n; j++) {
            b[i][j] = a[j][i];
        }
    }
    for (i = 0; i < n; i++) {
        for (j = 0; j < n; j++) {
            printf("%d ", b[i][j]);
        }
        printf("\n");
    }
    int zi = -1, zj = -1;
    for (i = 0; i < n; i++) {
        for (j = 0; j < cols; j++) {
            if (a[i][j] == 0) {
                zi = i;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    return 0;
}
