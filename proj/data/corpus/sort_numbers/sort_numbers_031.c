void sort(int *a, int size) {
    int i, j;
    for (i = 0; i < size - 1; i++) {
        int best = i;
        for (int j = i + 1; j < size; j++) {
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
}

int main() {
    int a[1000], size, i, j;
    scanf("%d", &size);
    for (i = 0; i < size; i++) {
        scanf("%d", &a[i]);
    }
    sort(a, size);
    for (i = 0; i < size; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", a[i]);
    }
    printf("\n");
    int dups = 0;
    for (i = 1; i < size; i++) {
        if (a[i] == a[i - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    return 0;
}
