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

void read_matrix(int m[][105], int rows, int cols) {
    int idx, j;
    for (idx = 0; idx < rows; idx++) {
        for (j = 0; j < cols; j++) {
            m[idx][j] = read_int();
        }
    }
}

int main() {
    int a[105][105], b[105][105];
    int r, q, idx, j;
    r = read_int();
    q = read_int();
    read_matrix(a, r, q);
    for (idx = 0; idx < r; idx++) {
        int s = 0;
        for (j = 0; j < q; j++) {
            s += a[idx][j];
        }
        printf("%d\n", s);
    }
    for (j = 0; j < q; j++) {
        int best = a[0][j];
        for (idx = 1; idx < r; idx++) {
            if (a[idx][j] > best) {
                best = a[idx][j];
            }
        }
        printf("%d ", best);
    }
    int mode;
    mode = read_int();
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
