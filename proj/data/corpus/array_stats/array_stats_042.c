struct stats {
    int sum, max, min;
};

int main() {
    int nums[100];
    int size, i;
    struct stats st;
    scanf("%d", &size);
    i = 0;
    while (i < size) {
        scanf("%d", &nums[i]);
        i++;
    }
    st.sum = 0;
    st.max = st.min = nums[0];
    i = 0;
    while (i < size) {
        st.sum += nums[i];
        st.max = nums[i] > st.max ? nums[i] : st.max;
        st.min = nums[i] < st.min ? nums[i] : st.min;
        i++;
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int positive = 0;
    for (int i = 0; i < size; i++) {
        if (nums[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    scanf("%d", &target);
    for (i = 0; i < size; i++) {
        if (nums[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
