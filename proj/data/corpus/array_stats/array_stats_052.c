typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int main(void) {
    int nums[1000];
    int num;
    Stats st;
    scanf("%d", &num);
    for (int k = 0; k < num; k++) {
        scanf("%d", &nums[k]);
    }
    st.sum = 0;
    st.max = st.min = nums[0];
    for (int k = 0; k < num; k++) {
        st.sum += nums[k];
        if (nums[k] > st.max) {
            st.max = nums[k];
        }
        if (nums[k] < st.min) {
            st.min = nums[k];
        }
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int positive = 0;
    for (int k = 0; k < num; k++) {
        if (nums[k] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
