int main(void) {
    int data[1000];
    int len, i, sum = 0, mx, mn;
    scanf("%d", &len);
    if (len <= 0) {
        printf("0\n");
        return 0;
    }
    i = 0;
    while (i < len) {
        scanf("%d", &data[i]);
        i++;
    }
    mx = mn = data[0];
    i = 0;
    while (i < len) {
        sum += data[i];
        mx = data[i] > mx ? data[i] : mx;
        mn = data[i] < mn ? data[i] : mn;
        i++;
    }
    double avg = (double)sum / len;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int positive = 0;
    for (int i = 0; i < len; i++) {
        if (data[i] <= 0) {
            continue;
        }
        positive++;
    }
    printf("%d\n", positive);
    return 0;
}
