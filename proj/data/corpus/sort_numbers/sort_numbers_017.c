int main() {
    int x[1000], len;
    scanf("%d", &len);
    for (int idx = 0; idx < len; idx++) {
        scanf("%d", &x[idx]);
    }
    for (int idx = 1; idx < len; idx++) {
        int key = x[idx];
        int j = idx - 1;
        while (j >= 0 && x[j] > key) {
            x[j + 1] = x[j];
            j--;
        }
        x[j + 1] = key;
    }
    for (int idx = 0; idx < len; idx++) {
        printf("%d\n", x[idx]);
    }
    return 0;
}
