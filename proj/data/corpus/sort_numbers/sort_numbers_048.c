void sort(int *arr, int len) {
    for (int i = 1; i < len; i++) {
        int key = arr[i];
        int j = i - 1;
        while (j >= 0 && arr[j] > key) {
            arr[j + 1] = arr[j];
            j--;
        }
        arr[j + 1] = key;
    }
}

int main() {
    int arr[50000], len;
    scanf("%d", &len);
    for (int i = 0; i < len; i++) {
        scanf("%d", &arr[i]);
    }
    sort(arr, len);
    for (int i = 0; i < len; i++) {
        printf(i == len - 1 ? "%d\n" : "%d ", arr[i]);
    }
    int distinct = 0;
    for (int i = 0; i < len; i++) {
        if (i > 0 && arr[i] == arr[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    int dups = 0;
    for (int i = 1; i < len; i++) {
        if (arr[i] == arr[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
