int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    int a[10][10], b[10][10];
    int n, cols;
    scanf("%d", &n);
    scanf("%d", &cols);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            scanf("%d", &a[i][j]);
        }
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            b[j][i] = a[i][j];
        }
    }
    for (int i = 0; i < cols; i++) {
        for (int j = 0; j < n; j++) {
            printf("%d ", b[i][j]);
        }
        printf("\n");
    }
    int off = 0;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < cols; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    printf("%d\n", absval(n - cols));
    return 0;
}
