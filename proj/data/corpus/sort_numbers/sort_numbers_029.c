void sort(int *nums, int n) {
    for (int i = 0; i < n - 1; i++) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
            if (nums[j] < nums[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = nums[best];
            nums[best] = nums[i];
            nums[i] = t;
        }
    }
}

int main() {
    int nums[100], n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &nums[i]);
    }
    sort(nums, n);
    for (int i = 0; i < n; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", nums[i]);
    }
    printf("\n");
    return 0;
}
