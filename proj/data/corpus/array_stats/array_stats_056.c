int max2(int p, int q) {
    return p > q ? p : q;
}

struct stats {
    int sum, max, min;
};

int main(void) {
    int arr[1000];
    int num, idx;
    struct stats st;
    scanf("%d", &num);
    for (idx = 0; idx < num; idx++) {
        scanf("%d", &arr[idx]);
    }
    st.sum = 0;
    st.max = st.min = arr[0];
    for (idx = 0; idx < num; idx++) {
        st.sum += arr[idx];
        if (arr[idx] > st.max) {
            st.max = arr[idx];
        }
        if (arr[idx] < st.min) {
            st.min = arr[idx];
        }
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int target, where = -1;
    scanf("%d", &target);
    for (idx = 0; idx < num; idx++) {
        if (arr[idx] == target) {
            where = idx;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
