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

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int data[1005], n;
    n = read_int();
    for (int k = 0; k < n; k++) {
        data[k] = read_int();
    }
    for (int k = 1; k < n; k++) {
        int key = data[k];
        int j = k - 1;
        while (j >= 0 && data[j] > key) {
            data[j + 1] = data[j];
            j--;
        }
        data[j + 1] = key;
    }
    for (int k = 0; k < n; k++) {
        printf(k == n - 1 ? "%d\n" : "%d ", data[k]);
    }
    int dups = 0;
    for (int k = 1; k < n; k++) {
        if (data[k] == data[k - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
