int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

void sort(int *a, int len) {
    int i, j;
    i = 1;
    while (i < len) {
        int key = a[i];
        int j = i - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
        i++;
    }
}

int main() {
    int a[1005], len, i, j;
    scanf("%d", &len);
    i = 0;
    while (i < len) {
        scanf("%d", &a[i]);
        i++;
    }
    sort(a, len);
    i = 0;
    while (i < len) {
        printf("%d\n", a[i]);
        i++;
    }
    int distinct = 0;
    for (int i = 0; i < len; i++) {
        if (i > 0 && a[i] == a[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    printf("%d\n", absval(a[len - 1] - a[0]));
    return 0;
}
