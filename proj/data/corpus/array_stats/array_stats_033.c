int main() {
    int x[1000];
    int size, sum = 0, mx, mn;
    scanf("%d", &size);
    if (size <= 0) {
        printf("0\n");
        return 0;
    }
    for (int i = 0; i < size; i++) {
        scanf("%d", &x[i]);
    }
    mx = mn = x[0];
    for (int i = 0; i < size; i++) {
        sum += x[i];
        mx = x[i] > mx ? x[i] : mx;
        mn = x[i] < mn ? x[i] : mn;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
