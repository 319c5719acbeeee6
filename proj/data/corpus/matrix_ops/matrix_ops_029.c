void read_matrix(int m[][10], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &m[i][j]);
        }
    }
}

int main() {
    int a[10][10], b[10][10];
    int r, q;
    scanf("%d", &r);
    scanf("%d", &q);
    read_matrix(a, r, q);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < q; j++) {
            b[j][i] = a[i][j];
        }
    }
    for (int i = 0; i < q; i++) {
        for (int j = 0; j < r; j++) {
            printf("%d ", b[i][j]);
        }
        printf("\n");
    }
    int off = 0;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < q; j++) {
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
            printf("%d %d\n", r, q);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
