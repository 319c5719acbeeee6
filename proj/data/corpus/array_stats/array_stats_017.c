struct stats {
    int sum, max, min;
};

int total(int x[], int len) {
    int s = 0;
    int k;
    for (k = 0; k < len; k++)
        s += x[k];
    return s;
}

int largest(int *x, int len) {
    int best = x[0];
    int k;
    for (k = 1; k < len; k++) {
        if (x[k] > best) {
            best = x[k];
        }
    }
    return best;
}

int main() {
    int x[105];
    int len, k;
    struct stats st;
    scanf("%d", &len);
    for (k = 0; k < len; k++)
        scanf("%d", &x[k]);
    st.sum = total(x, len);
    st.max = st.min = x[0];
    for (k = 0; k < len; k++) {
        if (x[k] > st.max) {
            st.max = x[k];
        }
        if (x[k] < st.min) {
            st.min = x[k];
        }
    }
    double avg = (double)st.sum / len;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    int positive = 0;
    for (int k = 0; k < len; k++) {
        if (x[k] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
