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

int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

typedef struct {
    int sum;
    int max;
    int min;
} Stats;

int total(int data[], int count) {
    int s = 0;
    for (int k = 0; k < count; k++) {
        s += data[k];
    }
    return s;
}

int largest(int *data, int count) {
    int best = data[0];
    for (int k = 1; k < count; k++) {
        if (data[k] > best) {
            best = data[k];
        }
    }
    return best;
}

int main() {
    int data[10000];
    int count;
    Stats st;
    count = read_int();
    for (int k = 0; k < count; k++) {
        data[k] = read_int();
    }
    st.sum = total(data, count);
    st.max = st.min = data[0];
    for (int k = 0; k < count; k++) {
        st.max = data[k] > st.max ? data[k] : st.max;
        st.min = data[k] < st.min ? data[k] : st.min;
    }
    printf("%d\n%d\n%d\n", st.sum, st.max, st.min);
    int above = 0;
    for (int k = 0; k < count; k++) {
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
    printf("%d\n", absval(st.max - st.min));
    return 0;
}
