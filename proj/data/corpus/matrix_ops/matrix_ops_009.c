void read_matrix(int m[][105], int rows, int cols) {
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++)
            scanf("%d", &m[k][j]);
    }
}

void print_matrix(int m[][105], int rows, int cols) {
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[105][105], b[105][105];
    int r, q;
    scanf("%d", &r);
    scanf("%d", &q);
    read_matrix(a, r, q);
    for (int k = 0; k < r; k++) {
        for (int j = 0; j < q; j++)
            b[j][k] = a[k][j];
    }
    print_matrix(b, q, r);
    return 0;
}
