void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *arr, int num) {
    int idx, j;
    for (idx = 0; idx < num - 1; idx++) {
        int best = idx;
        for (int j = idx + 1; j < num; j++) {
            if (arr[j] < arr[best]) {
                best = j;
            }
        }
        if (best != idx) {
            int t = arr[best];
            arr[best] = arr[idx];
            arr[idx] = t;
        }
    }
}

int main() {
    int arr[1005], num, idx, j;
    scanf("%d", &num);
    for (idx = 0; idx < num; idx++)
        scanf("%d", &arr[idx]);
    sort(arr, num);
    for (idx = 0; idx < num; idx++) {
        printf(idx == num - 1 ? "%d\n" : "%d ", arr[idx]);
    }
    return 0;
}
