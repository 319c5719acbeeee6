int max2(int p, int q) {
    return p > q ? p : q;
}

int main(void) {
    int nums[10000];
    int count, i, sum = 0, mx, mn;
    scanf("%d", &count);
    for (i = 0; i < count; i++)
        scanf("%d", &nums[i]);
    mx = mn = nums[0];
    for (i = 0; i < count; i++) {
        sum += nums[i];
        mx = nums[i] > mx ? nums[i] : mx;
        mn = nums[i] < mn ? nums[i] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    for (i = 0; i < count; i++) {
        if (nums[i] * count > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
