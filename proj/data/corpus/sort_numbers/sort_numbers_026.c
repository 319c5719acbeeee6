int main() {
    int data[100], n, k, j;
    scanf("%d", &n);
    for (k = 0; k < n; k++)
        scanf("%d", &data[k]);
    for (k = 0; k < n - 1; k++) {
        int swapped = 0;
        for (j = 0; j < n - 1 - k; j++) {
            if (data[j] > data[j + 1]) {
                int t = data[j];
                data[j] = data[j + 1];
                data[j + 1] = t;
                swapped = 1;
            }
        }
        if (!swapped) {
            break;
        }
    }
    for (k = 0; k < n; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", data[k]);
    }
    printf("\n");
    int dups = 0;
    for (k = 1; k < n; k++) {
        if (data[k] == data[k - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
