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

void sort(int *x, int num) {
    for (int k = 0; k < num; k++) {
        for (int j = 0; j < num - k - 1; j++) {
            if (x[j] > x[j + 1]) {
                swap(&x[j], &x[j + 1]);
            }
        }
    }
}

int main() {
    int x[100], num;
    scanf("%d", &num);
    for (int k = 0; k < num; k++) {
        scanf("%d", &x[k]);
    }
    sort(x, num);
    for (int k = 0; k < num; k++) {
        printf("%d\n", x[k]);
    }
    int distinct = 0;
    for (int k = 0; k < num; k++) {
        if (k > 0 && x[k] == x[k - 1]) {
            continue;
        }
        distinct++;
    }
    printf("%d\n", distinct);
    printf("%d\n", absval(x[num - 1] - x[0]));
    return 0;
}
