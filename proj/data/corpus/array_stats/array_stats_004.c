int main(void) {
    int x[10000];
    int count, k, sum = 0, mx, mn;
    scanf("%d", &count);
    for (k = 0; k < count; k++) {
        scanf("%d", &x[k]);
    }
    mx = mn = x[0];
    for (k = 0; k < count; k++) {
        sum += x[k];
        mx = x[k] > mx ? x[k] : mx;
        mn = x[k] < mn ? x[k] : mn;
    }
    double avg = (double)sum / count;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int target, where = -1;
    scanf("%d", &target);
    for (k = 0; k < count; k++) {
        if (x[k] == target) {
            where = k;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
