void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void quick(int data[], int lo, int hi) {
    if (lo >= hi) {
        return;
    }
    int pivot = data[(lo + hi) / 2], l = lo, r = hi;
    while (l <= r) {
        while (data[l] < pivot) l++;
        while (data[r] > pivot) r--;
        if (l <= r) {
            swap(&data[l], &data[r]);
            l++;
            r--;
        }
    }
    quick(data, lo, r);
    quick(data, l, hi);
}

int main() {
    int data[50000], n, i, j;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &data[i]);
    }
    quick(data, 0, n - 1);
    i = 0;
    while (i < n) {
        printf("%d\n", data[i]);
        i++;
    }
    return 0;
}
