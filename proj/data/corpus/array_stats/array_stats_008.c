int main(void) {
    int nums[105];
    int n, sum = 0, mx, mn;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &nums[i]);
    }
    mx = mn = nums[0];
    for (int i = 0; i < n; i++) {
        sum += nums[i];
        if (nums[i] > mx) {
            mx = nums[i];
        }
        if (nums[i] < mn) {
            mn = nums[i];
        }
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
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
    printf("%d\n", nums[n / 2]);
    int above = 0;
    for (int i = 0; i < n; i++) {
        if (nums[i] * n > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (nums[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    scanf("%d", &target);
    for (int i = 0; i < n; i++) {
        if (nums[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
