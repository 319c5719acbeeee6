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
    int nums[100], n, i, j;
    n = read_int();
    for (i = 0; i < n; i++) {
        nums[i] = read_int();
    }
    quick(nums, 0, n - 1);
    for (i = 0; i < n; i++) {
        printf(i == n - 1 ? "%d\n" : "%d ", nums[i]);
    }
    return 0;
}
