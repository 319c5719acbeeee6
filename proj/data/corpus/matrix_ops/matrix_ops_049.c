int a[20][20], b[20][20], c[20][20];

void print_matrix(int m[][20], int rows, int cols) {
    int k, j;
    k = 0;
    while (k < rows) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[k][j]);
        }
        putchar('\n');
        k++;
    }
}

int main() {
    int r, q, k, j, t;
    int p;
    scanf("%d %d %d", &r, &q, &p);
    for (k = 0; k < r; k++) {
        for (j = 0; j < q; j++) {
            scanf("%d", &a[k][j]);
        }
    }
    k = 0;
    while (k < q) {
        j = 0;
        while (j < p) {
            scanf("%d", &b[k][j]);
            j++;
        }
        k++;
    }
    k = 0;
    while (k < r) {
        j = 0;
        while (j < p) {
            c[k][j] = 0;
            for (t = 0; t < q; t++) {
                c[k][j] += a[k][t] * b[t][j];
            }
            j++;
        }
        k++;
    }
    print_matrix(c, r, p);
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
    int zi = -1, zj = -1;
    for (k = 0; k < r; k++) {
        j = 0;
        while (j < q) {
            if (a[k][j] == 0) {
                zi = k;
                zj = j;
                goto found;
            }
            j++;
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    return 0;
}
