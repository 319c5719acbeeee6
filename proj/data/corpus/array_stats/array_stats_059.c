typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int total(int a[], int num) {
    int s = 0;
    for (int idx = 0; idx < num; idx++) {
        s += a[idx];
    }
    return s;
}

int main(void) {
    int a[10000];
    int num;
    Stats st;
    scanf("%d", &num);
    for (int idx = 0; idx < num; idx++) {
        scanf("%d", &a[idx]);
    }
    st.sum = total(a, num);
    st.max = st.min = a[0];
    for (int idx = 0; idx < num; idx++) {
        st.max = a[idx] > st.max ? a[idx] : st.max;
        st.min = a[idx] < st.min ? a[idx] : st.min;
    }
    double avg = (double)st.sum / num;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    int positive = 0;
    for (int idx = 0; idx < num; idx++) {
        if (a[idx] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
