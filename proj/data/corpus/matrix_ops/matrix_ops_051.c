void read_matrix(int m[][105], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++)
            scanf("%d", &m[i][j]);
    }
}

int main() {
    int a[105][105], b[105][105], c[105][105];
    int r, cols;
    int p;
    scanf("%d %d %d", &r, &cols, &p);
    read_matrix(a, r, cols);
    read_matrix(b, cols, p);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < p; j++) {
            c[i][j] = 0;
            for (int k = 0; k < cols; k++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < p; j++) {
            printf("%d ", c[i][j]);
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
            printf("%d %d\n", r, cols);
            break;
        default:
            printf("?\n");
            break;
    }
    int zi = -1, zj = -1;
    for (int i = 0; i < r; i++) {
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
