int max2(int p, int q) {
    return p > q ? p : q;
}

int main() {
    int a[1000], n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        scanf("%d", &a[i]);
    for (int i = 0; i < n - 1; i++) {
        int best = i;
        for (int j = i + 1; j < n; j++) {
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
    for (int i = 0; i < n; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", a[i]);
    }
    printf("\n");
    int distinct = 0;
    for (int i = 0; i < n; i++) {
        if (i > 0 && a[i] == a[i - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    int dups = 0;
    for (int i = 1; i < n; i++) {
        if (a[i] == a[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    printf("%d\n", max2(a[0], a[n - 1]));
    return 0;
}
