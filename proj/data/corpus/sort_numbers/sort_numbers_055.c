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
    int nums[50000], n, idx, j;
    scanf("%d", &n);
    for (idx = 0; idx < n; idx++) {
        scanf("%d", &nums[idx]);
    }
    sort(nums, n);
    for (idx = 0; idx < n; idx++) {
        printf(idx == n - 1 ? "%d\n" : "%d ", nums[idx]);
    }
    return 0;
}
