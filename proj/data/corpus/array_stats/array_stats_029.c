int main(void) {
    int arr[105];
    int n, i, j, sum = 0, mx, mn;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &arr[i]);
    }
    mx = mn = arr[0];
    for (i = 0; i < n; i++) {
        sum += arr[i];
        if (arr[i] > mx) {
            mx = arr[i];
        }
        if (arr[i] < mn) {
            mn = arr[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    for (i = 1; i < n; i++) {
        int key = arr[i];
        int j = i - 1;
        while (j >= 0 && arr[j] > key) {
            arr[j + 1] = arr[j];
            j--;
        }
        arr[j + 1] = key;
    }
    printf("%d\n", arr[n / 2]);
    int positive = 0;
    for (int i = 0; i < n; i++) {
        if (arr[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    scanf("%d", &target);
    for (i = 0; i < n; i++) {
        if (arr[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
