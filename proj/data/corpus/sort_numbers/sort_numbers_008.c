void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void quick(int a[], int lo, int hi) {
    if (lo >= hi) {
        return;
    }
    int pivot = a[(lo + hi) / 2], l = lo, r = hi;
    while (l <= r) {
        while (a[l] < pivot) l++;
        while (a[r] > pivot) r--;
        if (l <= r) {
            swap(&a[l], &a[r]);
            l++;
            r--;
        }
    }
    quick(a, lo, r);
    quick(a, l, hi);
}

int main() {
    int a[100], n, idx, j;
    scanf("%d", &n);
    for (idx = 0; idx < n; idx++)
        scanf("%d", &a[idx]);
    quick(a, 0, n - 1);
    for (idx = 0; idx < n; idx++) {
        printf(idx == n - 1 ? "%d\n" : "%d ", a[idx]);
    }
    return 0;
}
