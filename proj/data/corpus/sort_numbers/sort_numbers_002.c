void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *x, int size) {
    int k, j;
    for (k = 0; k < size; k++) {
        for (j = 0; j < size - k - 1; j++) {
            if (x[j] < x[j + 1]) {
                swap(&x[j], &x[j + 1]);
            }
        }
    }
}

int main() {
    static int x[1000];
    int size, k, j;
    scanf("%d", &size);
    for (k = 0; k < size; k++) {
        scanf("%d", &x[k]);
    }
    sort(x, size);
    for (k = 0; k < size; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", x[k]);
    }
    printf("\n");
    int distinct = 0;
    for (int k = 0; k < size; k++) {
        if (k > 0 && x[k] == x[k - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
