int main() {
    int a[1000], count;
    scanf("%d", &count);
    for (int i = 0; i < count; i++) {
        scanf("%d", &a[i]);
    }
    for (int i = 0; i < count - 1; i++) {
        int best = i;
        for (int j = i + 1; j < count; j++) {
            if (a[j] < a[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = a[best];
            a[best] = a[i];
            a[i] = t;
        }
    }
    for (int i = 0; i < count; i++) {
        printf("%d\n", a[i]);
    }
    return 0;
}
