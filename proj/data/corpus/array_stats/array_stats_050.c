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

int total(int v[], int n) {
    int s = 0;
    int i;
    i = 0;
    while (i < n) {
        s += v[i];
        i++;
    }
    return s;
}

int largest(int *v, int n) {
    int best = v[0];
    int i;
    for (i = 1; i < n; i++) {
        if (v[i] > best) {
            best = v[i];
        }
    }
    return best;
}

int main() {
    int v[10000];
    int n, i, j, sum = 0, mx, mn;
    n = read_int();
    for (i = 0; i < n; i++) {
        v[i] = read_int();
    }
    sum = total(v, n);
    mx = mn = v[0];
    i = 0;
    while (i < n) {
        mx = v[i] > mx ? v[i] : mx;
        mn = v[i] < mn ? v[i] : mn;
        i++;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    i = 0;
    while (i < n - 1) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
            if (v[j] < v[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = v[best];
            v[best] = v[i];
            v[i] = t;
        }
        i++;
    }
    printf("%d\n", v[n / 2]);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (v[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
