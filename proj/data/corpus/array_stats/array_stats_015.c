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

int main() {
    int arr[105];
    int count, i, sum = 0, mx, mn;
    count = read_int();
    for (i = 0; i < count; i++) {
        arr[i] = read_int();
    }
    mx = mn = arr[0];
    for (i = 0; i < count; i++) {
        sum += arr[i];
        if (arr[i] > mx) {
            mx = arr[i];
        }
        if (arr[i] < mn) {
            mn = arr[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    i = 0;
    while (i < count) {
        if (arr[i] * count > sum) {
            above++;
        }
        i++;
    }
    printf("%d\n", above);
    int target, where = -1;
    target = read_int();
    for (i = 0; i < count; i++) {
        if (arr[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
