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

int total(int arr[], int size) {
    int s = 0;
    int i;
    for (i = 0; i < size; i++) {
        s += arr[i];
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
        mx = arr[i] > mx ? arr[i] : mx;
        mn = arr[i] < mn ? arr[i] : mn;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int above = 0;
    for (i = 0; i < size; i++) {
        if (arr[i] * size > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int positive = 0;
    for (int i = 0; i < size; i++) {
        if (arr[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    target = read_int();
    for (i = 0; i < size; i++) {
        if (arr[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
