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

int total(int nums[], int size) {
    int s = 0;
    for (int i = 0; i < size; i++) {
        s += nums[i];
    }
    return s;
}

int largest(int *nums, int size) {
    int best = nums[0];
    for (int i = 1; i < size; i++) {
        if (nums[i] > best) {
            best = nums[i];
        }
    }
    return best;
}

int main(void) {
    int nums[1000];
    int size, sum = 0, mx, mn;
    size = read_int();
    for (int i = 0; i < size; i++)
        nums[i] = read_int();
    sum = total(nums, size);
    mx = mn = nums[0];
    for (int i = 0; i < size; i++) {
        mx = nums[i] > mx ? nums[i] : mx;
        mn = nums[i] < mn ? nums[i] : mn;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int target, where = -1;
    target = read_int();
    for (int i = 0; i < size; i++) {
        if (nums[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
