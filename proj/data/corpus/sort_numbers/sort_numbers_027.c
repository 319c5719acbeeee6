void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void quick(int x[], int lo, int hi) {
    if (lo >= hi) {
        return;
    }
    int pivot = x[(lo + hi) / 2], l = lo, r = hi;
    while (l <= r) {
        while (x[l] > pivot) l++;
        while (x[r] < pivot) r--;
        if (l <= r) {
            swap(&x[l], &x[r]);
            l++;
            r--;
        }
    }
    quick(x, lo, r);
    quick(x, l, hi);
}

int main() {
    int x[100], count, i, j;
    scanf("%d", &count);
    for (i = 0; i < count; i++)
        scanf("%d", &x[i]);
    quick(x, 0, count - 1);
    for (i = 0; i < count; i++) {
        printf("%d\n", x[i]);
    }
    int dups = 0;
    for (i = 1; i < count; i++) {
        if (x[i] == x[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
