void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int x[1005], num;
    scanf("%d", &num);
    for (int k = 0; k < num; k++)
        scanf("%d", &x[k]);
    for (int k = 0; k < num; k++) {
        for (int j = 0; j < num - k - 1; j++) {
            if (x[j] < x[j + 1]) {
                swap(&x[j], &x[j + 1]);
            }
        }
    }
    for (int k = 0; k < num; k++)
        printf(k == num - 1 ? "%d\n" : "%d ", x[k]);
    return 0;
}
