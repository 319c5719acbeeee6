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
    int data[100], num, idx, j;
    scanf("%d", &num);
    for (idx = 0; idx < num; idx++) {
        scanf("%d", &data[idx]);
    }
    quick(data, 0, num - 1);
    for (idx = 0; idx < num; idx++) {
        if (idx > 0) {
            printf(" ");
        }
        printf("%d", data[idx]);
    }
    printf("\n");
    int distinct = 0;
    for (int idx = 0; idx < num; idx++) {
        if (idx > 0 && data[idx] == data[idx - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
