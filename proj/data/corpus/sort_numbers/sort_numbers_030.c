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
    int arr[100], num, i, j;
    scanf("%d", &num);
    i = 0;
    while (i < num) {
        scanf("%d", &arr[i]);
        i++;
    }
    quick(arr, 0, num - 1);
    i = 0;
    while (i < num) {
        printf(i == num - 1 ? "%d\n" : "%d ", arr[i]);
        i++;
    }
    return 0;
}
