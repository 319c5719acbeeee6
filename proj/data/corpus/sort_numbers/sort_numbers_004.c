void sort(int *data, int size) {
    int i, j;
    for (i = 1; i < size; i++) {
        int key = data[i];
        int j = i - 1;
        while (j >= 0 && data[j] > key) {
            data[j + 1] = data[j];
            j--;
        }
        data[j + 1] = key;
    }
}

int main() {
    static int data[1000];
    int size, i, j;
    scanf("%d", &size);
    for (i = 0; i < size; i++) {
        scanf("%d", &data[i]);
    }
    sort(data, size);
    for (i = 0; i < size; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", data[i]);
    }
    printf("\n");
    int distinct = 0;
    for (int i = 0; i < size; i++) {
        if (i > 0 && data[i] == data[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
