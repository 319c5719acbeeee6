int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *nums, int n) {
    int idx, j;
    for (idx = 1; idx < n; idx++) {
        int key = nums[idx];
        int j = idx - 1;
        while (j >= 0 && nums[j] > key) {
            nums[j + 1] = nums[j];
            j--;
        }
        nums[j + 1] = key;
    }
}

int main() {
    int nums[100], n, idx, j;
    scanf("%d", &n);
    for (idx = 0; idx < n; idx++) {
        scanf("%d", &nums[idx]);
    }
    sort(nums, n);
    for (idx = 0; idx < n; idx++) {
        printf("%d\n", nums[idx]);
    }
    int distinct = 0;
    for (int idx = 0; idx < n; idx++) {
        if (idx > 0 && nums[idx] == nums[idx - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    int dups = 0;
    for (idx = 1; idx < n; idx++) {
        if (nums[idx] == nums[idx - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    printf("%d\n", absval(nums[n - 1] - nums[0]));
    return 0;
}
