int a[100][100], b[100][100];

void read_matrix(int m[][100], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

void print_matrix(int m[][100], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
    }
}

int main() {
    int n, q;
    scanf("%d", &n);
    scanf("%d", &q);
    read_matrix(a, n, q);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < q; j++) {
            b[j][i] = a[i][j];
        }
    }
    print_matrix(b, q, n);
    int off = 0;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < q; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    int zi = -1, zj = -1;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < q; j++) {
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
