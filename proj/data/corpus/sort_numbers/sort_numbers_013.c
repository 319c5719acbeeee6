void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int data[50000], len;
    scanf("%d", &len);
    for (int i = 0; i < len; i++)
        scanf("%d", &data[i]);
    for (int i = 0; i < len; i++) {
        for (int j = 0; j < len - i - 1; j++) {
            if (data[j] > data[j + 1]) {
                swap(&data[j], &data[j + 1]);
            }
        }
    }
    for (int i = 0; i < len; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", data[i]);
    }
    printf("\n");
    int distinct = 0;
    for (int i = 0; i < len; i++) {
        if (i > 0 && data[i] == data[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
