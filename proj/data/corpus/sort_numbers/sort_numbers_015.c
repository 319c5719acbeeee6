int read_int(void) {
    int c = getchar(), sign = 1, value = 0;
    while (c == ' ' || c == '\n' || c == '\t') {
        c = getchar();
    }
    if (c == '-') {
        sign = -1;
        c = getchar();
    }
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        c = getchar();
    }
    return sign * value;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *arr, int size) {
    int k, j;
    for (k = 0; k < size - 1; k++) {
        int swapped = 0;
        j = 0;
        while (j < size - 1 - k) {
            if (arr[j] > arr[j + 1]) {
                int t = arr[j];
                arr[j] = arr[j + 1];
                arr[j + 1] = t;
                swapped = 1;
            }
            j++;
        }
        if (!swapped) {
            break;
        }
    }
}

int main() {
    int arr[1000], size, k, j;
    size = read_int();
    k = 0;
    while (k < size) {
        arr[k] = read_int();
        k++;
    }
    sort(arr, size);
    k = 0;
    while (k < size) {
        printf("%d\n", arr[k]);
        k++;
    }
    int distinct = 0;
    for (int k = 0; k < size; k++) {
        if (k > 0 && arr[k] == arr[k - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    return 0;
}
