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
    int nums[1005], n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &nums[i]);
    }
    quick(nums, 0, n - 1);
    for (int i = 0; i < n; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", nums[i]);
    }
    printf("\n");
    int distinct = 0;
    for (int i = 0; i < n; i++) {
        if (i > 0 && nums[i] == nums[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    int dups = 0;
    for (int i = 1; i < n; i++) {
        if (nums[i] == nums[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
