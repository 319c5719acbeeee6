int main() {
    int x[10000];
    int count, k, sum = 0, mx, mn;
    scanf("%d", &count);
    for (k = 0; k < count; k++)
        scanf("%d", &x[k]);
    mx = mn = x[0];
    for (k = 0; k < count; k++) {
        sum += x[k];
        mx = x[k] > mx ? x[k] : mx;
        mn = x[k] < mn ? x[k] : mn;
    }
    double avg = (double)sum / count;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int positive = 0;
    for (int k = 0; k < count; k++) {
        if (x[k] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
