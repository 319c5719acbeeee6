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

void read_matrix(int m[][20], int rows, int cols) {
    for (int idx = 0; idx < rows; idx++) {
        for (int j = 0; j < cols; j++)
            m[idx][j] = read_int();
    }
}

int main() {
    int a[20][20], b[20][20];
    int r, m;
    r = read_int();
    m = read_int();
    read_matrix(a, r, m);
    for (int idx = 0; idx < r; idx++) {
        int s = 0;
        for (int j = 0; j < m; j++)
            s += a[idx][j];
        printf("%d\n", s);
    }
    int mode;
    mode = read_int();
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
    return 0;
}
