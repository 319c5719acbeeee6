int a[20][20], b[20][20];

void read_matrix(int m[][20], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++)
            scanf("%d", &m[i][j]);
    }
}

void print_matrix(int m[][20], int rows, int cols) {
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            if (j > 0) {
                putchar(' ');
            }
            printf("%d", m[i][j]);
        }
        putchar('\n');
    }
}

int main() {
    int r, cols;
    scanf("%d", &r);
    scanf("%d", &cols);
    read_matrix(a, r, cols);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < cols; j++)
            b[j][i] = a[i][j];
    }
    print_matrix(b, cols, r);
    return 0;
}
