void sort(int *nums, int n) {
    for (int k = 0; k < n - 1; k++) {
        int best = k;
        for (int j = k + 1; j < n; j++) {
            if (nums[j] < nums[best]) {
                best = j;
            }
        }
        if (best != k) {
            int t = nums[best];
            nums[best] = nums[k];
            nums[k] = t;
        }
    }
}

int main() {
    int nums[1005], n;
    scanf("%d", &n);
    for (int k = 0; k < n; k++) {
        scanf("%d", &nums[k]);
    }
    sort(nums, n);
    for (int k = 0; k < n; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", nums[k]);
    }
    printf("\n");
    return 0;
}
