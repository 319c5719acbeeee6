int max2(int p, int q) {
    return p > q ? p : q;
}

void sort(int *a, int n) {
    for (int idx = 1; idx < n; idx++) {
        int key = a[idx];
        int j = idx - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
    }
}

int main() {
    int a[1005], n;
    scanf("%d", &n);
    for (int idx = 0; idx < n; idx++) {
        scanf("%d", &a[idx]);
    }
    sort(a, n);
    for (int idx = 0; idx < n; idx++) {
        if (idx > 0) {
            printf(" ");
        }
        printf("%d", a[idx]);
    }
    printf("\n");
    printf("%d\n", max2(a[0], a[n - 1]));
    return 0;
}
