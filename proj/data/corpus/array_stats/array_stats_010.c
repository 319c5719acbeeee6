int max2(int p, int q) {
    return p > q ? p : q;
}

typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int total(int data[], int count) {
    int s = 0;
    int k;
    for (k = 0; k < count; k++) {
        s += data[k];
    }
    return s;
}

int largest(int *data, int count) {
    int best = data[0];
    int k;
    for (k = 1; k < count; k++) {
        best = max2(best, data[k]);
    }
    return best;
}

int main() {
    int data[100];
    int count, k;
    Stats st;
    scanf("%d", &count);
    if (count <= 0) {
        printf("0\n");
        return 0;
    }
    for (k = 0; k < count; k++) {
        scanf("%d", &data[k]);
    }
    st.sum = total(data, count);
    st.max = st.min = data[0];
    for (k = 0; k < count; k++) {
        st.max = data[k] > st.max ? data[k] : st.max;
        st.min = data[k] < st.min ? data[k] : st.min;
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int above = 0;
    for (k = 0; k < count; k++) {
        if (data[k] * count > st.sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int k = 0; k < count; k++) {
        if (data[k] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
