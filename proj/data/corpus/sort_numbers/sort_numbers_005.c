int read_int(void) {
    int c = getchar(), sign = 1, value = 0;
    while (c == ' ' || c == '\n' || c == '\t') {
        c = getchar();
    }
    if (c == '-') {
        sign = -1;
        c = getchar();
    }
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        c = getchar();
    }
    return sign * value;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void quick(int arr[], int lo, int hi) {
    if (lo >= hi) {
        return;
    }
    int pivot = arr[(lo + hi) / 2], l = lo, r = hi;
    while (l <= r) {
        while (arr[l] < pivot) l++;
        while (arr[r] > pivot) r--;
        if (l <= r) {
            swap(&arr[l], &arr[r]);
            l++;
            r--;
        }
    }
    quick(arr, lo, r);
    quick(arr, l, hi);
}

int main() {
    int arr[50000], count, i, j;
    count = read_int();
    for (i = 0; i < count; i++) {
        arr[i] = read_int();
    }
    quick(arr, 0, count - 1);
    for (i = 0; i < count; i++) {
        printf(i == count - 1 ? "%d\n" : "%d ", arr[i]);
    }
    return 0;
}
