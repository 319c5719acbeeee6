int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int main() {
    int x[10000];
    int n, k, sum = 0, mx, mn;
    scanf("%d", &n);
    for (k = 0; k < n; k++) {
        scanf("%d", &x[k]);
    }
    mx = mn = x[0];
    for (k = 0; k < n; k++) {
        sum += x[k];
        mx = x[k] > mx ? x[k] : mx;
        mn = x[k] < mn ? x[k] : mn;
    }
    double avg = (double)sum / n;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int above = 0;
    for (k = 0; k < n; k++) {
        if (x[k] * n > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    int target, where = -1;
    scanf("%d", &target);
    for (k = 0; k < n; k++) {
        if (x[k] == target) {
            where = k;
            break;
        }
    }
    printf("%d\n", where);
    printf("%d\n", absval(mx - mn));
    return 0;
}
