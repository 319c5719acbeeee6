typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int main() {
    int a[10000];
    int count;
    Stats st;
    scanf("%d", &count);
    if (count <= 0) {
        printf("0\n");
        return 0;
    }
    for (int idx = 0; idx < count; idx++)
        scanf("%d", &a[idx]);
    st.sum = 0;
    st.max = st.min = a[0];
    for (int idx = 0; idx < count; idx++) {
        st.sum += a[idx];
        st.max = a[idx] > st.max ? a[idx] : st.max;
        st.min = a[idx] < st.min ? a[idx] : st.min;
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int positive = 0;
    for (int idx = 0; idx < count; idx++) {
        if (a[idx] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
