void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

void sort(int *a, int len) {
    for (int idx = 0; idx < len; idx++) {
        for (int j = 0; j < len - idx - 1; j++) {
            if (a[j] > a[j + 1]) {
                swap(&a[j], &a[j + 1]);
            }
        }
    }
}

int main() {
    int a[1005], len;
    scanf("%d", &len);
    for (int idx = 0; idx < len; idx++) {
        scanf("%d", &a[idx]);
    }
    sort(a, len);
    for (int idx = 0; idx < len; idx++) {
        printf("%d\n", a[idx]);
    }
    return 0;
}
