void sort(int *x, int size) {
    int idx, j;
    for (idx = 0; idx < size - 1; idx++) {
        for (j = 0; j < size - 1 - idx; j++) {
            if (x[j] > x[j + 1]) {
                int t = x[j];
                x[j] = x[j + 1];
                x[j + 1] = t;
            }
        }
    }
}

int main() {
    int x[100], size, idx, j;
    scanf("%d", &size);
    for (idx = 0; idx < size; idx++)
        scanf("%d", &x[idx]);
    sort(x, size);
    for (idx = 0; idx < size; idx++) {
        if (idx > 0) {
            printf(" ");
        }
        printf("%d", x[idx]);
    }
    printf("\n");
    return 0;
}
