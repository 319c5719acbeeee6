int total(int a[], int count) {
    int s = 0;
    int k;
    for (k = 0; k < count; k++) {
        s += a[k];
    }
    return s;
}

int main() {
    int a[100];
    int count, k, sum = 0, mx, mn;
    scanf("%d", &count);
    for (k = 0; k < count; k++)
        scanf("%d", &a[k]);
    sum = total(a, count);
    mx = mn = a[0];
    for (k = 0; k < count; k++) {
        if (a[k] > mx) {
            mx = a[k];
        }
        if (a[k] < mn) {
            mn = a[k];
        }
    }
    double avg = (double)sum / count;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
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
