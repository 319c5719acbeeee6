enum { MAXN = 10 };

void read_matrix(int m[][MAXN], int rows, int cols) {
    int k, j;
    k = 0;
    while (k < rows) {
        j = 0;
        while (j < cols) {
            scanf("%d", &m[k][j]);
            j++;
        }
        k++;
    }
}

void print_matrix(int m[][MAXN], int rows, int cols) {
    int k, j;
    for (k = 0; k < rows; k++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN];
    int r, cols, k, j;
    scanf("%d", &r);
    scanf("%d", &cols);
    read_matrix(a, r, cols);
    k = 0;
    while (k < r) {
        for (j = 0; j < cols; j++) {
            b[j][k] = a[k][j];
        }
        k++;
    }
    print_matrix(b, cols, r);
    return 0;
}
