int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int arr[105];
    int num, k, sum = 0, mx, mn;
    scanf("%d", &num);
    for (k = 0; k < num; k++) {
        scanf("%d", &arr[k]);
    }
    mx = mn = arr[0];
    for (k = 0; k < num; k++) {
        sum += arr[k];
        if (arr[k] > mx) {
            mx = arr[k];
        }
        if (arr[k] < mn) {
            mn = arr[k];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int above = 0;
    for (k = 0; k < num; k++) {
        if (arr[k] * num > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
