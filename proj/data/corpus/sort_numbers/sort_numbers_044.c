int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    int a[50000], n, i, j;
    scanf("%d", &n);
    for (i = 0; i < n; i++)
        scanf("%d", &a[i]);
    for (i = 1; i < n; i++) {
        int key = a[i];
        int j = i - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
    }
    for (i = 0; i < n; i++)
        printf(i == n - 1 ? "%d\n" : "%d ", a[i]);
    int distinct = 0;
    for (int i = 0; i < n; i++) {
        if (i > 0 && a[i] == a[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    printf("%d\n", absval(a[n - 1] - a[0]));
    return 0;
}
