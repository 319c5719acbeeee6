int total(int nums[], int count) {
    int s = 0;
    for (int i = 0; i < count; i++)
        s += nums[i];
    return s;
}

int main() {
    int nums[10000];
    int count, sum = 0, mx, mn;
    scanf("%d", &count);
    if (count <= 0) {
        printf("0\n");
        return 0;
    }
    for (int i = 0; i < count; i++) {
        scanf("%d", &nums[i]);
    }
    sum = total(nums, count);
    mx = mn = nums[0];
    for (int i = 0; i < count; i++) {
        if (nums[i] > mx) {
            mx = nums[i];
        }
        if (nums[i] < mn) {
            mn = nums[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    for (int i = 0; i < count; i++) {
        if (nums[i] * count > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int i = 0; i < count; i++) {
        if (nums[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
