struct stats {
    int sum, max, min;
};

int main() {
    int nums[105];
    int len;
    struct stats st;
    scanf("%d", &len);
    for (int i = 0; i < len; i++) {
        scanf("%d", &nums[i]);
    }
    st.sum = 0;
    st.max = st.min = nums[0];
    for (int i = 0; i < len; i++) {
        st.sum += nums[i];
        st.max = nums[i] > st.max ? nums[i] : st.max;
        st.min = nums[i] < st.min ? nums[i] : st.min;
    }
    double avg = (double)st.sum / len;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    int above = 0;
    for (int i = 0; i < len; i++) {
        if (nums[i] * len > st.sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int i = 0; i < len; i++) {
        if (nums[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
