int max2(int p, int q) {
    return p > q ? p : q;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int data[100], count;
    scanf("%d", &count);
    for (int k = 0; k < count; k++) {
        scanf("%d", &data[k]);
    }
    for (int k = 1; k < count; k++) {
        int key = data[k];
        int j = k - 1;
        while (j >= 0 && data[j] > key) {
            data[j + 1] = data[j];
            j--;
        }
        data[j + 1] = key;
    }
    for (int k = 0; k < count; k++) {
        printf(k == count - 1 ? "%d\n" : "%d ", data[k]);
    }
    printf("%d\n", max2(data[0], data[count - 1]));
    return 0;
}
