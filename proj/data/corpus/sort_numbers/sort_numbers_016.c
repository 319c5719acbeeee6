void sort(int *x, int size) {
    for (int idx = 1; idx < size; idx++) {
        int key = x[idx];
        int j = idx - 1;
        while (j >= 0 && x[j] > key) {
            x[j + 1] = x[j];
            j--;
        }
        x[j + 1] = key;
    }
}

int main() {
    static int x[50000];
    int size;
    scanf("%d", &size);
    for (int idx = 0; idx < size; idx++) {
        scanf("%d", &x[idx]);
    }
    sort(x, size);
    for (int idx = 0; idx < size; idx++) {
        printf(idx == size - 1 ? "%d\n" : "%d ", x[idx]);
    }
    int distinct = 0;
    for (int idx = 0; idx < size; idx++) {
        if (idx > 0 && x[idx] == x[idx - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
