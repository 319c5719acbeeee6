typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int total(int a[], int num) {
    int s = 0;
    int idx;
    int *p = a;
    while (p < a + num) {
        s += *p++;
    }
    return s;
}

int largest(int *a, int num) {
    int best = a[0];
    int idx;
    idx = 1;
    while (idx < num) {
        if (a[idx] > best) {
            best = a[idx];
        }
        idx++;
    }
    return best;
}

int main(void) {
    int a[100];
    int num, idx, j;
    Stats st;
    scanf("%d", &num);
    for (idx = 0; idx < num; idx++)
        scanf("%d", &a[idx]);
    st.sum = total(a, num);
    st.max = st.min = a[0];
    for (idx = 0; idx < num; idx++) {
        st.max = a[idx] > st.max ? a[idx] : st.max;
        st.min = a[idx] < st.min ? a[idx] : st.min;
    }
    double avg = (double)st.sum / num;
    printf("%d %d %d %.2f\n", st.sum, st.max, st.min, avg);
    for (idx = 1; idx < num; idx++) {
        int key = a[idx];
        int j = idx - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
    }
    printf("%d\n", a[num / 2]);
    int target, where = -1;
    scanf("%d", &target);
    for (idx = 0; idx < num; idx++) {
        if (a[idx] == target) {
            where = idx;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
