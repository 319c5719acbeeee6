int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int arr[100];
    int size, k, j, sum = 0, mx, mn;
    scanf("%d", &size);
    for (k = 0; k < size; k++) {
        scanf("%d", &arr[k]);
    }
    mx = mn = arr[0];
    for (k = 0; k < size; k++) {
        sum += arr[k];
        if (arr[k] > mx) {
            mx = arr[k];
        }
        if (arr[k] < mn) {
            mn = arr[k];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    for (k = 1; k < size; k++) {
        int key = arr[k];
        int j = k - 1;
        while (j >= 0 && arr[j] > key) {
            arr[j + 1] = arr[j];
            j--;
        }
        arr[j + 1] = key;
    }
    printf("%d\n", arr[size / 2]);
    int above = 0;
    for (k = 0; k < size; k++) {
        if (arr[k] * size > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
