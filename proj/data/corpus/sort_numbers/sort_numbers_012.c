void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int data[50000], num, k, j;
    scanf("%d", &num);
    for (k = 0; k < num; k++) {
        scanf("%d", &data[k]);
    }
    for (k = 0; k < num; k++) {
        for (j = 0; j < num - k - 1; j++) {
            if (data[j] > data[j + 1]) {
                swap(&data[j], &data[j + 1]);
            }
        }
    }
    for (k = 0; k < num; k++) {
        printf(k == num - 1 ? "%d\n" : "%d ", data[k]);
    }
    return 0;
}
