int total(int a[], int count) {
    int s = 0;
    int k;
    k = 0;
    while (k < count) {
        s += a[k];
        k++;
    }
    return s;
}

int largest(int *a, int count) {
    int best = a[0];
    int k;
    k = 1;
    while (k < count) {
        if (a[k] > best) {
            best = a[k];
        }
        k++;
    }
    return best;
}

int main() {
    int a[105];
    int count, k, sum = 0, mx, mn;
    scanf("%d", &count);
    if (count <= 0) {
        printf("0\n");
        return 0;
    }
    for (k = 0; k < count; k++) {
        scanf("%d", &a[k]);
    }
    sum = total(a, count);
    mx = mn = a[0];
    k = 0;
    while (k < count) {
        if (a[k] > mx) {
            mx = a[k];
        }
        if (a[k] < mn) {
            mn = a[k];
        }
        k++;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int positive = 0;
    for (int k = 0; k < count; k++) {
        if (a[k] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
