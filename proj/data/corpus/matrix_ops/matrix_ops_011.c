int max2(int p, int q) {
    return p > q ? p : q;
}

int a[100][100], b[100][100], c[100][100];

int main() {
    int rows, m, idx, j;
    scanf("%d", &rows);
    scanf("%d", &m);
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < m; j++) {
            scanf("%d", &a[idx][j]);
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        j = 0;
        while (j < m) {
            scanf("%d", &b[idx][j]);
            j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < m; j++) {
            c[idx][j] = a[idx][j] + b[idx][j];
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < m; j++) {
            printf("%d ", c[idx][j]);
        }
        printf("\n");
        idx++;
    }
    int zi = -1, zj = -1;
    for (idx = 0; idx < rows; idx++) {
        j = 0;
        while (j < m) {
            if (a[idx][j] == 0) {
                zi = idx;
                zj = j;
                goto found;
            }
            j++;
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    printf("%d\n", max2(rows, m));
    return 0;
}
