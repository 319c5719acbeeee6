void sort(int *a, int n) {
    int k, j;
    k = 1;
    while (k < n) {
        int key = a[k];
        int j = k - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
        k++;
    }
}

int main() {
    int a[100], n, k, j;
    scanf("%d", &n);
    for (k = 0; k < n; k++)
        scanf("%d", &a[k]);
    sort(a, n);
    k = 0;
    while (k < n) {
        printf(k == n - 1 ? "%d\n" : "%d ", a[k]);
        k++;
    }
    int distinct = 0;
    for (int k = 0; k < n; k++) {
        if (k > 0 && a[k] == a[k - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
