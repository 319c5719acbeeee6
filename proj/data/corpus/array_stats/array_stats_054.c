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

int total(int arr[], int size) {
    int s = 0;
    int i;
    int *p = arr;
    while (p < arr + size) {
        s += *p++;
    }
    return s;
}

int main() {
    int arr[100];
    int size, i, sum = 0, mx, mn;
    size = read_int();
    for (i = 0; i < size; i++) {
        arr[i] = read_int();
    }
    sum = total(arr, size);
    mx = mn = arr[0];
    for (i = 0; i < size; i++) {
        if (arr[i] > mx) {
            mx = arr[i];
        }
        if (arr[i] < mn) {
            mn = arr[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int positive = 0;
    for (int i = 0; i < size; i++) {
        if (arr[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
