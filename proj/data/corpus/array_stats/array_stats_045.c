int main(void) {
    int x[100];
    int size, sum = 0, mx, mn;
    scanf("%d", &size);
    if (size <= 0) {
        printf("0\n");
        return 0;
    }
    for (int idx = 0; idx < size; idx++) {
        scanf("%d", &x[idx]);
    }
    mx = mn = x[0];
    for (int idx = 0; idx < size; idx++) {
        sum += x[idx];
        mx = x[idx] > mx ? x[idx] : mx;
        mn = x[idx] < mn ? x[idx] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int target, where = -1;
    scanf("%d", &target);
    for (int idx = 0; idx < size; idx++) {
        if (x[idx] == target) {
            where = idx;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
