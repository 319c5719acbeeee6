enum { MAXN = 10 };

int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];

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
    int rows, cols, idx, j;
    scanf("%d", &rows);
    scanf("%d", &cols);
    idx = 0;
    while (idx < rows) {
        j = 0;
        while (j < cols) {
            scanf("%d", &a[idx][j]);
            j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &b[idx][j]);
        }
        idx++;
    }
    idx = 0;
    while (idx < rows) {
        j = 0;
        while (j < cols) {
            c[idx][j] = a[idx][j] + b[idx][j];
            j++;
        }
        idx++;
    }
    print_matrix(c, rows, cols);
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, cols);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
