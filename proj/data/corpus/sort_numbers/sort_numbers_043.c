int main() {
    int arr[1000], size, k, j;
    scanf("%d", &size);
    for (k = 0; k < size; k++)
        scanf("%d", &arr[k]);
    for (k = 0; k < size - 1; k++) {
        int best = k;
        for (int j = k + 1; j < size; j++) {
            if (arr[j] < arr[best]) {
                best = j;
            }
        }
        if (best != k) {
            int t = arr[best];
            arr[best] = arr[k];
            arr[k] = t;
        }
    }
    for (k = 0; k < size; k++)
        printf("%d\n", arr[k]);
    return 0;
}
