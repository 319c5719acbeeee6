int main() {
    int v[105];
    int n, i, sum = 0, mx, mn;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &v[i]);
    }
    mx = mn = v[0];
    for (i = 0; i < n; i++) {
        sum += v[i];
        if (v[i] > mx) {
            mx = v[i];
        }
        if (v[i] < mn) {
            mn = v[i];
        }
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int target, where = -1;
    scanf("%d", &target);
    for (i = 0; i < n; i++) {
        if (v[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
