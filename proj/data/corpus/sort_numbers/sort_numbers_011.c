void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *data, int n) {
    int idx, j;
    for (idx = 1; idx < n; idx++) {
        int key = data[idx];
        int j = idx - 1;
        while (j >= 0 && data[j] > key) {
            data[j + 1] = data[j];
            j--;
        }
        data[j + 1] = key;
    }
}

int main() {
    int data[50000], n, idx, j;
    scanf("%d", &n);
    for (idx = 0; idx < n; idx++) {
        scanf("%d", &data[idx]);
    }
    sort(data, n);
    for (idx = 0; idx < n; idx++) {
        printf(idx == n - 1 ? "%d\n" : "%d ", data[idx]);
    }
    return 0;
}
