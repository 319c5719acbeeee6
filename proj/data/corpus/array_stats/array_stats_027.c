typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int main() {
    int arr[105];
    int n, i, j;
    Stats st;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &arr[i]);
    }
    st.sum = 0;
    st.max = st.min = arr[0];
    for (i = 0; i < n; i++) {
        st.sum += arr[i];
        if (arr[i] > st.max) {
            st.max = arr[i];
        }
        if (arr[i] < st.min) {
            st.min = arr[i];
        }
    }
    double avg = (double)st.sum / n;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    for (i = 0; i < n - 1; i++) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
            if (arr[j] < arr[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = arr[best];
            arr[best] = arr[i];
            arr[i] = t;
        }
    }
    printf("%d\n", arr[n / 2]);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (arr[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
