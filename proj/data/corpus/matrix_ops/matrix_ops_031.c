int a[100][100], b[100][100];

int main() {
    int r, cols, i, j;
    scanf("%d", &r);
    scanf("%d", &cols);
    for (i = 0; i < r; i++) {
        for (j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (i = 0; i < r; i++) {
        int s = 0;
        for (j = 0; j < cols; j++) {
            s += a[i][j];
        }
        printf("%d\n", s);
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
    return 0;
}
