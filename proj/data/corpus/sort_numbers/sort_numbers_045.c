int max2(int p, int q) {
    return p > q ? p : q;
}

void sort(int *arr, int n) {
    for (int i = 0; i < n - 1; i++) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
            if (arr[j] < arr[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = arr[best];
            arr[best] = arr[i];
            arr[i] = t;
        }
    }
}

int main() {
    int arr[1000], n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &arr[i]);
    }
    sort(arr, n);
    for (int i = 0; i < n; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", arr[i]);
    }
    printf("\n");
    int dups = 0;
    for (int i = 1; i < n; i++) {
        if (arr[i] == arr[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    printf("%d\n", max2(arr[0], arr[n - 1]));
    return 0;
}
