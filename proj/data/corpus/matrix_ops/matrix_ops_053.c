enum { MAXN = 10 };

int a[MAXN][MAXN], b[MAXN][MAXN];

void read_matrix(int m[][MAXN], int rows, int cols) {
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &m[k][j]);
        }
    }
}

int main() {
    int rows, q;
    scanf("%d", &rows);
    scanf("%d", &q);
    read_matrix(a, rows, q);
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < q; j++) {
            b[j][k] = a[k][j];
        }
    }
    for (int k = 0; k < q; k++) {
        for (int j = 0; j < rows; j++) {
            printf("%d ", b[k][j]);
        }
        printf("\n");
    }
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", rows, q);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
