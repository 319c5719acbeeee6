int main() {
    int data[1000];
    int n, k, sum = 0, mx, mn;
    scanf("%d", &n);
    for (k = 0; k < n; k++)
        scanf("%d", &data[k]);
    mx = mn = data[0];
    for (k = 0; k < n; k++) {
        sum += data[k];
        if (data[k] > mx) {
            mx = data[k];
        }
        if (data[k] < mn) {
            mn = data[k];
        }
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
