void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *arr, int count) {
    for (int i = 0; i < count - 1; i++) {
        int best = i;
        for (int j = i + 1; j < count; j++) {
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
    int arr[50000], count;
    scanf("%d", &count);
    for (int i = 0; i < count; i++) {
        scanf("%d", &arr[i]);
    }
    sort(arr, count);
    for (int i = 0; i < count; i++) {
        printf("%d\n", arr[i]);
    }
    return 0;
}
