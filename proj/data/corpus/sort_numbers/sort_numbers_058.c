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
    static int a[1005];
    int len;
    scanf("%d", &len);
    for (int i = 0; i < len; i++) {
        scanf("%d", &a[i]);
    }
    quick(a, 0, len - 1);
    for (int i = 0; i < len; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", a[i]);
    }
    printf("\n");
    int distinct = 0;
    for (int i = 0; i < len; i++) {
        if (i > 0 && a[i] == a[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
