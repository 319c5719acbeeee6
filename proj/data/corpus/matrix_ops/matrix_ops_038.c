int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

enum { MAXN = 105 };

void print_matrix(int m[][MAXN], int rows, int cols) {
    int i, j;
    for (i = 0; i < rows; i++) {
        for (j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
    }
}

int main() {
    int a[MAXN][MAXN], b[MAXN][MAXN], c[MAXN][MAXN];
    int r, m, i, j, k;
    int p;
    scanf("%d %d %d", &r, &m, &p);
    for (i = 0; i < r; i++) {
        for (j = 0; j < m; j++)
            scanf("%d", &a[i][j]);
    }
    for (i = 0; i < m; i++) {
        for (j = 0; j < p; j++)
            scanf("%d", &b[i][j]);
    }
    for (i = 0; i < r; i++) {
        for (j = 0; j < p; j++) {
            c[i][j] = 0;
            for (k = 0; k < m; k++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    print_matrix(c, r, p);
    int mode;
    scanf("%d", &mode);
    switch (mode) {
        case 1:
            printf("%d\n", a[0][0]);
            break;
        case 2:
            printf("%d %d\n", r, m);
            break;
        default:
            printf("?\n");
            break;
    }
    int zi = -1, zj = -1;
    for (i = 0; i < r; i++) {
        for (j = 0; j < m; j++) {
            if (a[i][j] == 0) {
                zi = i;
                zj = j;
                goto found;
            }
        }
    }
    found:
    printf("%d %d\n", zi, zj);
    printf("%d\n", absval(r - m));
    return 0;
}
