int total(int arr[], int count) {
    int s = 0;
    for (int idx = 0; idx < count; idx++) {
        s += arr[idx];
    }
    return s;
}

int largest(int *arr, int count) {
    int best = arr[0];
    for (int idx = 1; idx < count; idx++) {
        if (arr[idx] > best) {
            best = arr[idx];
        }
    }
    return best;
}

int main() {
    int arr[105];
    int count, sum = 0, mx, mn;
    scanf("%d", &count);
    for (int idx = 0; idx < count; idx++) {
        scanf("%d", &arr[idx]);
    }
    sum = total(arr, count);
    mx = mn = arr[0];
    for (int idx = 0; idx < count; idx++) {
        if (arr[idx] > mx) {
            mx = arr[idx];
        }
        if (arr[idx] < mn) {
            mn = arr[idx];
        }
    }
    double avg = (double)sum / count;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int positive = 0;
    for (int idx = 0; idx < count; idx++) {
        if (arr[idx] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
