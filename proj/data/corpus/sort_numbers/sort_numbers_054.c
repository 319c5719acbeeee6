int max2(int p, int q) {
    return p > q ? p : q;
}

void sort(int *x, int count) {
    for (int k = 1; k < count; k++) {
        int key = x[k];
        int j = k - 1;
        while (j >= 0 && x[j] > key) {
            x[j + 1] = x[j];
            j--;
        }
        x[j + 1] = key;
    }
}

int main() {
    int x[100], count;
    scanf("%d", &count);
    for (int k = 0; k < count; k++)
        scanf("%d", &x[k]);
    sort(x, count);
    for (int k = 0; k < count; k++) {
        if (k > 0) {
            printf(" ");
        }
        printf("%d", x[k]);
    }
    printf("\n");
    int dups = 0;
    for (int k = 1; k < count; k++) {
        if (x[k] == x[k - 1]) {
            dups++;
        }
    }
    printf("%d\n", dups);
    printf("%d\n", max2(x[0], x[count - 1]));
    return 0;
}
