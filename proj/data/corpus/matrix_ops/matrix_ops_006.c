int max2(int p, int q) {
    return p > q ? p : q;
}

void read_matrix(int m[][100], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[idx][j]);
        }
    }
}

int main() {
    int a[100][100], b[100][100];
    int r, q, idx, j;
    scanf("%d", &r);
    scanf("%d", &q);
    read_matrix(a, r, q);
    for (idx = 0; idx < r; idx++) {
        int s = 0;
        j = 0;
        while (j < q) {
            s += a[idx][j];
            j++;
        }
        printf("%d\n", s);
    }
    j = 0;
    while (j < q) {
        int best = a[0][j];
        idx = 1;
        while (idx < r) {
            if (a[idx][j] > best) {
                best = a[idx][j];
            }
            idx++;
        }
        printf("%d ", best);
        j++;
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
    printf("%d\n", max2(r, q));
    return 0;
}
