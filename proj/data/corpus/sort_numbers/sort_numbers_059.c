int max2(int p, int q) {
    return p > q ? p : q;
}

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
    int a[100], num;
    scanf("%d", &num);
    for (int i = 0; i < num; i++) {
        scanf("%d", &a[i]);
    }
    quick(a, 0, num - 1);
    for (int i = 0; i < num; i++) {
        printf(i == num - 1 ? "%d\n" : "%d ", a[i]);
    }
    int distinct = 0;
    for (int i = 0; i < num; i++) {
        if (i > 0 && a[i] == a[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    printf("%d\n", max2(a[0], a[num - 1]));
    return 0;
}
