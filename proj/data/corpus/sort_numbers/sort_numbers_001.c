int max2(int p, int q) {
    return p > q ? p : q;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *arr, int num) {
    for (int i = 0; i < num; i++) {
        for (int j = 0; j < num - i - 1; j++) {
            if (arr[j] > arr[j + 1]) {
                swap(&arr[j], &arr[j + 1]);
            }
        }
    }
}

int main() {
    static int arr[1000];
    int num;
    scanf("%d", &num);
    for (int i = 0; i < num; i++) {
        scanf("%d", &arr[i]);
    }
    sort(arr, num);
    for (int i = 0; i < num; i++) {
        printf("%d\n", arr[i]);
    }
    printf("%d\n", max2(arr[0], arr[num - 1]));
    return 0;
}
