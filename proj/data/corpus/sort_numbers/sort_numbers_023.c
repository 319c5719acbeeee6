int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int main() {
    int v[50000], n, k, j;
    scanf("%d", &n);
    for (k = 0; k < n; k++) {
        scanf("%d", &v[k]);
    }
    for (k = 0; k < n; k++) {
        for (j = 0; j < n - k - 1; j++) {
            if (v[j] < v[j + 1]) {
                swap(&v[j], &v[j + 1]);
            }
        }
    }
    for (k = 0; k < n; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", v[k]);
    }
    printf("\n");
    printf("%d\n", absval(v[n - 1] - v[0]));
    return 0;
}
