int max2(int p, int q) {
    return p > q ? p : q;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void quick(int nums[], int lo, int hi) {
    if (lo >= hi) {
        return;
    }
    int pivot = nums[(lo + hi) / 2], l = lo, r = hi;
    while (l <= r) {
        while (nums[l] < pivot) l++;
        while (nums[r] > pivot) r--;
        if (l <= r) {
            swap(&nums[l], &nums[r]);
            l++;
            r--;
        }
    }
    quick(nums, lo, r);
    quick(nums, l, hi);
}

int main() {
    int nums[100], n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &nums[i]);
    }
    quick(nums, 0, n - 1);
    for (int i = 0; i < n; i++) {
        printf("%d\n", nums[i]);
    }
    printf("%d\n", max2(nums[0], nums[n - 1]));
    return 0;
}
