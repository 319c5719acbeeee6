int total(int arr[], int size) {
    int s = 0;
    for (int i = 0; i < size; i++) {
        s += arr[i];
    }
    return s;
}

int largest(int *arr, int size) {
    int best = arr[0];
    for (int i = 1; i < size; i++) {
        if (arr[i] > best) {
            best = arr[i];
        }
    }
    return best;
}

int main() {
    int arr[105];
    int size, sum = 0, mx, mn;
    scanf("%d", &size);
    for (int i = 0; i < size; i++) {
        scanf("%d", &arr[i]);
    }
    sum = total(arr, size);
    mx = mn = arr[0];
    for (int i = 0; i < size; i++) {
        mx = arr[i] > mx ? arr[i] : mx;
        mn = arr[i] < mn ? arr[i] : mn;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int above = 0;
    for (int i = 0; i < size; i++) {
        if (arr[i] * size > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int target, where = -1;
    scanf("%d", &target);
    for (int i = 0; i < size; i++) {
        if (arr[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
