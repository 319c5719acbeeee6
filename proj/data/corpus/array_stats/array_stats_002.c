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

struct stats {
    int sum, max, min;
};

int main() {
    int nums[1000];
    int count;
    struct stats st;
    count = read_int();
    for (int i = 0; i < count; i++)
        nums[i] = read_int();
    st.sum = 0;
    st.max = st.min = nums[0];
    for (int i = 0; i < count; i++) {
        st.sum += nums[i];
        if (nums[i] > st.max) {
            st.max = nums[i];
        }
        if (nums[i] < st.min) {
            st.min = nums[i];
        }
    }
    double avg = (double)st.sum / count;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    for (int i = 0; i < count - 1; i++) {
        int best = i;
        for (int j = i + 1; j < count; j++) {
            if (nums[j] < nums[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = nums[best];
            nums[best] = nums[i];
            nums[i] = t;
        }
    }
    printf("%d\n", nums[count / 2]);
    return 0;
}
