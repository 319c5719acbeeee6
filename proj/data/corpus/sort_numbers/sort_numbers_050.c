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

int main() {
    int arr[100], size, i, j;
    size = read_int();
    for (i = 0; i < size; i++)
        arr[i] = read_int();
    i = 0;
    while (i < size - 1) {
        j = 0;
        while (j < size - 1 - i) {
            if (arr[j] > arr[j + 1]) {
                int t = arr[j];
                arr[j] = arr[j + 1];
                arr[j + 1] = t;
            }
            j++;
        }
        i++;
    }
    i = 0;
    while (i < size) {
        printf("%d\n", arr[i]);
        i++;
    }
    return 0;
}
