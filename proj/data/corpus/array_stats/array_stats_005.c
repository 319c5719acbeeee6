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

int total(int data[], int count) {
    int s = 0;
    for (int i = 0; i < count; i++) {
        s += data[i];
    }
    return s;
}

int main() {
    int data[1000];
    int count, sum = 0, mx, mn;
    count = read_int();
    if (count <= 0) {
        printf("0\n");
        return 0;
    }
    for (int i = 0; i < count; i++) {
        data[i] = read_int();
    }
    sum = total(data, count);
    mx = mn = data[0];
    for (int i = 0; i < count; i++) {
        if (data[i] > mx) {
            mx = data[i];
        }
        if (data[i] < mn) {
            mn = data[i];
        }
    }
    double avg = (double)sum / count;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
