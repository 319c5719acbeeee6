int main() {
    int x[1005], n, i, j;
    scanf("%d", &n);
    i = 0;
    while (i < n) {
        scanf("%d", &x[i]);
        i++;
    }
    i = 1;
    while (i < n) {
        int key = x[i];
        int j = i - 1;
        while (j >= 0 && x[j] > key) {
            x[j + 1] = x[j];
            j--;
        }
        x[j + 1] = key;
        i++;
    }
    for (i = 0; i < n; i++)
        printf("%d\n", x[i]);
    return 0;
}
