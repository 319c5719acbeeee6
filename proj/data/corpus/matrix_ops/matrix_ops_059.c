void read_matrix(int m[][105], int rows, int cols) {
    for (int idx = 0; idx < rows; idx++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &m[idx][j]);
        }
    }
}

int main() {
    int a[105][105], b[105][105], c[105][105];
    int r, q;
    int p;
    scanf("%d %d %d", &r, &q, &p);
    read_matrix(a, r, q);
    read_matrix(b, q, p);
    for (int idx = 0; idx < r; idx++) {
        for (int j = 0; j < p; j++) {
            c[idx][j] = 0;
            for (int k = 0; k < q; k++) {
                c[idx][j] += a[idx][k] * b[k][j];
            }
        }
    }
    for (int idx = 0; idx < r; idx++) {
        for (int j = 0; j < p; j++) {
            printf("%d ", c[idx][j]);
        }
        printf("\n");
    }
    int off = 0;
    for (int idx = 0; idx < r; idx++) {
        for (int j = 0; j < q; j++) {
            if (idx == j) {
                continue;
            }
            off += a[idx][j];
        }
    }
    printf("%d\n", off);
    int zi = -1, zj = -1;
    for (int idx = 0; idx < r; idx++) {
        for (int j = 0; j < q; j++) {
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
