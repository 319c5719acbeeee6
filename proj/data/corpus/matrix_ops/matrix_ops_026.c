enum { MAXN = 105 };

void read_matrix(int m[][MAXN], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN];
    int rows, cols;
    scanf("%d", &rows);
    scanf("%d", &cols);
    read_matrix(a, rows, cols);
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            b[j][i] = a[i][j];
        }
    }
    for (int i = 0; i < cols; i++) {
        for (int j = 0; j < rows; j++) {
            printf("%d ", b[i][j]);
        }
        printf("\n");
    }
    int off = 0;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
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
    int zi = -1, zj = -1;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
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
