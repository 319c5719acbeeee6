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

int max2(int p, int q) {
    return p > q ? p : q;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    static int arr[1005];
    int size, idx, j;
    size = read_int();
    for (idx = 0; idx < size; idx++) {
        arr[idx] = read_int();
    }
    for (idx = 0; idx < size - 1; idx++) {
        for (j = 0; j < size - 1 - idx; j++) {
            if (arr[j] > arr[j + 1]) {
                int t = arr[j];
                arr[j] = arr[j + 1];
                arr[j + 1] = t;
            }
        }
    }
    for (idx = 0; idx < size; idx++) {
        printf(idx == size - 1 ? "%d\n" : "%d ", arr[idx]);
    }
    printf("%d\n", max2(arr[0], arr[size - 1]));
    return 0;
}
