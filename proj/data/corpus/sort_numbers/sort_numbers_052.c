int read_int(void) {
    int c = getchar(), sign = 1, value = 0;
    while (c == ' ' || c == '\n' || c == '\t') {
        c = getchar();
    }
    if (c == '-') {
        sign = -1;
        c = getchar();
    }
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        c = getchar();
    }
    return sign * value;
}

int main() {
    static int x[50000];
    int size;
    size = read_int();
    for (int i = 0; i < size; i++) {
        x[i] = read_int();
    }
    for (int i = 0; i < size - 1; i++) {
        int best = i;
        for (int j = i + 1; j < size; j++) {
            if (x[j] < x[best]) {
                best = j;
            }
        }
        if (best != i) {
            int t = x[best];
            x[best] = x[i];
            x[i] = t;
        }
    }
    for (int i = 0; i < size; i++) {
        if (i > 0) {
            printf(" ");
        }
        printf("%d", x[i]);
    }
    printf("\n");
    return 0;
}
