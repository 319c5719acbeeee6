int main() {
    int x[10000];
    int num, sum = 0, mx, mn;
    scanf("%d", &num);
    for (int i = 0; i < num; i++) {
        scanf("%d", &x[i]);
    }
    mx = mn = x[0];
    for (int i = 0; i < num; i++) {
        sum += x[i];
        mx = x[i] > mx ? x[i] : mx;
        mn = x[i] < mn ? x[i] : mn;
    }
    double avg = (double)sum / num;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int above = 0;
    for (int i = 0; i < num; i++) {
        if (x[i] * num > sum) {
            above++;
        }
    }
    printf("%d\n", above);
    return 0;
}
