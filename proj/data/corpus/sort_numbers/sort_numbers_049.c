int main() {
    int data[50000], n, idx, j;
    scanf("%d", &n);
    for (idx = 0; idx < n; idx++) {
        scanf("%d", &data[idx]);
    }
    for (idx = 0; idx < n - 1; idx++) {
        for (j = 0; j < n - 1 - idx; j++) {
            if (data[j] > data[j + 1]) {
                int t = data[j];
                data[j] = data[j + 1];
                data[j + 1] = t;
            }
        }
    }
    for (idx = 0; idx < n; idx++) {
        if (idx > 0) {
            printf(" ");
        }
        printf("%d", data[idx]);
    }
    printf("\n");
    int dups = 0;
    for (idx = 1; idx < n; idx++) {
        if (data[idx] == data[idx - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
