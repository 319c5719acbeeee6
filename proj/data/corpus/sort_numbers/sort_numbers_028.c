void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    static int a[1000];
    int n, k, j;
    scanf("%d", &n);
    for (k = 0; k < n; k++) {
        scanf("%d", &a[k]);
    }
    for (k = 0; k < n; k++) {
        for (j = 0; j < n - k - 1; j++) {
            if (a[j] > a[j + 1]) {
                swap(&a[j], &a[j + 1]);
            }
        }
    }
    for (k = 0; k < n; k++) {
        printf(k == n - 1 ? "%d\n" : "%d ", a[k]);
    }
    int dups = 0;
    for (k = 1; k < n; k++) {
        if (a[k] == a[k - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
