int main() {
    int data[100], len, i, j;
    scanf("%d", &len);
    i = 0;
    while (i < len) {
        scanf("%d", &data[i]);
        i++;
    }
    for (i = 0; i < len - 1; i++) {
        j = 0;
        while (j < len - 1 - i) {
            if (data[j] > data[j + 1]) {
                int t = data[j];
                data[j] = data[j + 1];
                data[j + 1] = t;
            }
            j++;
        }
    }
    for (i = 0; i < len; i++) {
        printf(i == len - 1 ? "%d\n" : "%d ", data[i]);
    }
    int dups = 0;
    for (i = 1; i < len; i++) {
        if (data[i] == data[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
