int total(int nums[], int size) {
    int s = 0;
    for (int i = 0; i < size; i++) {
        s += nums[i];
    }
    return s;
}

int main() {
    int nums[105];
    int size, sum = 0, mx, mn;
    scanf("%d", &size);
    for (int i = 0; i < size; i++) {
        scanf("%d", &nums[i]);
    }
    sum = total(nums, size);
    mx = mn = nums[0];
    for (int i = 0; i < size; i++) {
        mx = nums[i] > mx ? nums[i] : mx;
        mn = nums[i] < mn ? nums[i] : mn;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    for (int i = 0; i < size - 1; i++) {
        for (int j = 0; j < size - 1 - i; j++) {
            if (nums[j] > nums[j + 1]) {
                int t = nums[j];
                nums[j] = nums[j + 1];
                nums[j + 1] = t;
            }
        }
    }
    printf("%d\n", nums[size / 2]);
    int positive = 0;
    for (int i = 0; i < size; i++) {
        if (nums[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
