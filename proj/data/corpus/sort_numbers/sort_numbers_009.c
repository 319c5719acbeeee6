void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *arr, int n) {
    int k, j;
    for (k = 0; k < n; k++) {
        for (j = 0; j < n - k - 1; j++) {
            if (arr[j] < arr[j + 1]) {
                swap(&arr[j], &arr[j + 1]);
            }
        }
    }
}

int main() {
    static int arr[50000];
    int n, k, j;
    scanf("%d", &n);
    for (k = 0; k < n; k++)
        scanf("%d", &arr[k]);
    sort(arr, n);
    for (k = 0; k < n; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", arr[k]);
    }
    printf("\n");
    int distinct = 0;
    for (int k = 0; k < n; k++) {
        if (k > 0 && arr[k] == arr[k - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    int dups = 0;
    for (k = 1; k < n; k++) {
        if (arr[k] == arr[k - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
