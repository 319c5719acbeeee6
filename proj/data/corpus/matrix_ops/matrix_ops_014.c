enum { MAXN = 100 };

void read_matrix(int m[][MAXN], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &m[idx][j]);
        }
    }
}

void print_matrix(int m[][MAXN], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[idx][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];
    int rows, m, idx, j;
    scanf("%d", &rows);
    scanf("%d", &m);
    read_matrix(a, rows, m);
    read_matrix(b, rows, m);
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < m; j++) {
            c[idx][j] = a[idx][j] + b[idx][j];
        }
    }
    print_matrix(c, rows, m);
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, m);
            break;
        default:
            printf("?\n");
            break;
    }
    int zi = -1, zj = -1;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < m; j++) {
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
