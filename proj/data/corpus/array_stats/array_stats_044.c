int total(int v[], int len) {
    int s = 0;
    for (int i = 0; i < len; i++)
        s += v[i];
    return s;
}

int largest(int *v, int len) {
    int best = v[0];
    for (int i = 1; i < len; i++) {
        if (v[i] > best) {
            best = v[i];
        }
    }
    return best;
}

int main() {
    int v[10000];
    int len, sum = 0, mx, mn;
    scanf("%d", &len);
    for (int i = 0; i < len; i++)
        scanf("%d", &v[i]);
    sum = total(v, len);
    mx = mn = v[0];
    for (int i = 0; i < len; i++) {
        if (v[i] > mx) {
            mx = v[i];
        }
        if (v[i] < mn) {
            mn = v[i];
        }
    }
    double avg = (double)sum / len;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
