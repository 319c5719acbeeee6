int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int v[1000];
    int num, i, sum = 0, mx, mn;
    scanf("%d", &num);
    for (i = 0; i < num; i++)
        scanf("%d", &v[i]);
    mx = mn = v[0];
    for (i = 0; i < num; i++) {
        sum += v[i];
        mx = v[i] > mx ? v[i] : mx;
        mn = v[i] < mn ? v[i] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    int positive = 0;
    for (int i = 0; i < num; i++) {
        if (v[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    int target, where = -1;
    scanf("%d", &target);
    for (i = 0; i < num; i++) {
        if (v[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
