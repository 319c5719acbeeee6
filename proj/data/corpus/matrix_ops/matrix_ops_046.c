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

void read_matrix(int m[][100], int rows, int cols) {
    for (int idx = 0; idx < rows; idx++) {
        for (int j = 0; j < cols; j++) {
            m[idx][j] = read_int();
        }
    }
}

int main() {
    int a[100][100], b[100][100];
    int r, cols;
    r = read_int();
    cols = read_int();
    read_matrix(a, r, cols);
    for (int idx = 0; idx < r; idx++) {
        int s = 0;
        for (int j = 0; j < cols; j++) {
            s += a[idx][j];
        }
        printf("%d\n", s);
    }
    for (int j = 0; j < cols; j++) {
        int best = a[0][j];
        for (int idx = 1; idx < r; idx++) {
            if (a[idx][j] > best) {
                best = a[idx][j];
            }
        }
        printf("%d ", best);
    }
    return 0;
}
