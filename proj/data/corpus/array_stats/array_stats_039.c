int main() {
    int arr[105];
    int num, i, sum = 0, mx, mn;
    scanf("%d", &num);
    if (num <= 0) {
        printf("0\n");
        return 0;
    }
    for (i = 0; i < num; i++)
        scanf("%d", &arr[i]);
    mx = mn = arr[0];
    for (i = 0; i < num; i++) {
        sum += arr[i];
        if (arr[i] > mx) {
            mx = arr[i];
        }
        if (arr[i] < mn) {
            mn = arr[i];
        }
    }
    double avg = (double)sum / num;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
