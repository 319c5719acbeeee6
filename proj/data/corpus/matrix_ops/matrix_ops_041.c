int read_int(void) {
    int c = getchar(), sign = 1, value = 0;
    while (c == ' ' || c == '\n' || c == '\t') {
        c = getchar();
    }
    if (c == '-') {
        sign = -1;
        c = getchar();
    }
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        c = getchar();
    }
    return sign * value;
}

int a[20][20], b[20][20];

int main() {
    int r, cols;
    r = read_int();
    cols = r;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++)
            a[i][j] = read_int();
    }
    int d1 = 0, d2 = 0;
    for (int i = 0; i < r; i++) {
        d1 += a[i][i];
        d2 += a[i][r - 1 - i];
    }
    printf("%d %d\n", d1, d2);
    int off = 0;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < cols; j++) {
            if (i == j) {
                continue;
            }
            off += a[i][j];
        }
    }
    printf("%d\n", off);
    int mode;
    mode = read_int();
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
