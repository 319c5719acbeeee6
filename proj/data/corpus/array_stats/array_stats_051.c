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

int total(int a[], int num) {
    int s = 0;
    int k;
    for (k = 0; k < num; k++) {
        s += a[k];
    }
    return s;
}

int main() {
    int a[1000];
    int num, k, sum = 0, mx, mn;
    num = read_int();
    for (k = 0; k < num; k++) {
        a[k] = read_int();
    }
    sum = total(a, num);
    mx = mn = a[0];
    for (k = 0; k < num; k++) {
        if (a[k] > mx) {
            mx = a[k];
        }
        if (a[k] < mn) {
            mn = a[k];
        }
    }
    double avg = (double)sum / num;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int above = 0;
    for (k = 0; k < num; k++) {
        if (a[k] * num > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
