int a[100][100], b[100][100];

int main() {
    int rows, q;
    scanf("%d", &rows);
    scanf("%d", &q);
    for (int k = 0; k < rows; k++) {
        for (int j = 0; j < q; j++)
            scanf("%d", &a[k][j]);
    }
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
    return 0;
}
