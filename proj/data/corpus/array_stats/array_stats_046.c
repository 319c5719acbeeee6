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

int main(void) {
    int arr[100];
    int n, idx;
    struct stats st;
    n = read_int();
    for (idx = 0; idx < n; idx++) {
        arr[idx] = read_int();
    }
    st.sum = 0;
    st.max = st.min = arr[0];
    for (idx = 0; idx < n; idx++) {
        st.sum += arr[idx];
        st.max = arr[idx] > st.max ? arr[idx] : st.max;
        st.min = arr[idx] < st.min ? arr[idx] : st.min;
    }
    double avg = (double)st.sum / n;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    int above = 0;
    for (idx = 0; idx < n; idx++) {
        if (arr[idx] * n > st.sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
