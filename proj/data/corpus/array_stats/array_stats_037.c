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

int total(int nums[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += nums[i];
    }
    return s;
}

int largest(int *nums, int n) {
    int best = nums[0];
    for (int i = 1; i < n; i++) {
        if (nums[i] > best) {
            best = nums[i];
        }
    }
    return best;
}

int main() {
    int nums[1000];
    int n, sum = 0, mx, mn;
    n = read_int();
    for (int i = 0; i < n; i++) {
        nums[i] = read_int();
    }
    sum = total(nums, n);
    mx = mn = nums[0];
    for (int i = 0; i < n; i++) {
        mx = nums[i] > mx ? nums[i] : mx;
        mn = nums[i] < mn ? nums[i] : mn;
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
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
    return 0;
}
