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

int main() {
    int data[105];
    int size, idx, j, sum = 0, mx, mn;
    size = read_int();
    if (size <= 0) {
        printf("0\n");
        return 0;
    }
    for (idx = 0; idx < size; idx++) {
        data[idx] = read_int();
    }
    mx = mn = data[0];
    for (idx = 0; idx < size; idx++) {
        sum += data[idx];
        mx = data[idx] > mx ? data[idx] : mx;
        mn = data[idx] < mn ? data[idx] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    for (idx = 0; idx < size - 1; idx++) {
        for (j = 0; j < size - 1 - idx; j++) {
            if (data[j] > data[j + 1]) {
                int t = data[j];
                data[j] = data[j + 1];
                data[j + 1] = t;
            }
        }
    }
    printf("%d\n", data[size / 2]);
    int positive = 0;
    for (int idx = 0; idx < size; idx++) {
        if (data[idx] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    target = read_int();
    for (idx = 0; idx < size; idx++) {
        if (data[idx] == target) {
            where = idx;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
