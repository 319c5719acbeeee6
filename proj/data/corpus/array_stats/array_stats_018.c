int max2(int p, int q) {
    return p > q ? p : q;
}

int total(int arr[], int size) {
    int s = 0;
    int k;
    for (k = 0; k < size; k++) {
        s += arr[k];
    }
    return s;
}

int main() {
    int arr[1000];
    int size, k, sum = 0, mx, mn;
    scanf("%d", &size);
    if (size <= 0) {
        printf("0\n");
        return 0;
    }
    for (k = 0; k < size; k++) {
        scanf("%d", &arr[k]);
    }
    sum = total(arr, size);
    mx = mn = arr[0];
    for (k = 0; k < size; k++) {
        if (arr[k] > mx) {
            mx = arr[k];
        }
        if (arr[k] < mn) {
            mn = arr[k];
        }
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
