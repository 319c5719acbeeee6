struct stats {
    int sum, max, min;
};

int total(int nums[], int n) {
    int s = 0;
    for (int idx = 0; idx < n; idx++) {
        s += nums[idx];
    }
    return s;
}

int largest(int *nums, int n) {
    int best = nums[0];
    for (int idx = 1; idx < n; idx++) {
        if (nums[idx] > best) {
            best = nums[idx];
        }
    }
    return best;
}

int main() {
    int nums[1000];
    int n;
    struct stats st;
    scanf("%d", &n);
    if (n <= 0) {
        printf("0\n");
        return 0;
    }
    for (int idx = 0; idx < n; idx++) {
        scanf("%d", &nums[idx]);
    }
    st.sum = total(nums, n);
    st.max = st.min = nums[0];
    for (int idx = 0; idx < n; idx++) {
        st.max = nums[idx] > st.max ? nums[idx] : st.max;
        st.min = nums[idx] < st.min ? nums[idx] : st.min;
    }
    double avg = (double)st.sum / n;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    for (int idx = 0; idx < n - 1; idx++) {
        int best = idx;
        for (int j = idx + 1; j < n; j++) {
            if (nums[j] < nums[best]) {
                best = j;
            }
        }
        if (best != idx) {
            int t = nums[best];
            nums[best] = nums[idx];
            nums[idx] = t;
        }
    }
    printf("%d\n", nums[n / 2]);
    int above = 0;
    for (int idx = 0; idx < n; idx++) {
        if (nums[idx] * n > st.sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
