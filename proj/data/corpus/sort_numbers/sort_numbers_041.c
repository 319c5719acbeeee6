int main() {
    static int arr[50000];
    int len;
    scanf("%d", &len);
    for (int idx = 0; idx < len; idx++)
        scanf("%d", &arr[idx]);
    for (int idx = 1; idx < len; idx++) {
        int key = arr[idx];
        int j = idx - 1;
        while (j >= 0 && arr[j] > key) {
            arr[j + 1] = arr[j];
            j--;
        }
        arr[j + 1] = key;
    }
    for (int idx = 0; idx < len; idx++)
        printf("%d\n", arr[idx]);
    return 0;
}
