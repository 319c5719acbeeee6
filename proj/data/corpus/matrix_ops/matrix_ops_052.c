int a[100][100], b[100][100], c[100][100];

void read_matrix(int m[][100], int rows, int cols) {
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < cols; j++)
            scanf("%d", &m[k][j]);
    }
}

int main() {
    int rows, m;
    scanf("%d", &rows);
    scanf("%d", &m);
    read_matrix(a, rows, m);
    read_matrix(b, rows, m);
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < m; j++)
            c[k][j] = a[k][j] + b[k][j];
    }
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < m; j++) {
            printf("%d ", c[k][j]);
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
            printf("%d %d\n", rows, m);
            break;
        case 3:
        default:
            printf("?\n");
            break;
    }
    return 0;
}
