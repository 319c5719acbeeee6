int main(void) {
    int v[105];
    int len, i, sum = 0, mx, mn;
    scanf("%d", &len);
    for (i = 0; i < len; i++) {
        scanf("%d", &v[i]);
    }
    mx = mn = v[0];
    for (i = 0; i < len; i++) {
        sum += v[i];
        mx = v[i] > mx ? v[i] : mx;
        mn = v[i] < mn ? v[i] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    return 0;
}
