int max2(int p, int q) {
    return p > q ? p : q;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int x[1000], n, i, j;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &x[i]);
    }
    for (i = 0; i < n; i++) {
        for (j = 0; j < n - i - 1; j++) {
            if (x[j] > x[j + 1]) {
                swap(&x[j], &x[j + 1]);
            }
        }
    }
    for (i = 0; i < n; i++) {
        printf(i == n - 1 ? "%d\n" : "%d ", x[i]);
    }
    int dups = 0;
    for (i = 1; i < n; i++) {
        if (x[i] == x[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    printf("%d\n", max2(x[0], x[n - 1]));
    return 0;
}
