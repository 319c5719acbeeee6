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
        while (a[l] > pivot) l++;
        while (a[r] < pivot) r--;
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
    int a[1000], n, i, j;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &a[i]);
    }
    quick(a, 0, n - 1);
    for (i = 0; i < n; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", a[i]);
    }
    printf("\n");
    return 0;
}
