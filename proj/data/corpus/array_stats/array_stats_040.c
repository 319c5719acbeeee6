int max2(int p, int q) {
    return p > q ? p : q;
}

int total(int v[], int num) {
    int s = 0;
    for (int i = 0; i < num; i++) {
        s += v[i];
    }
    return s;
}

int largest(int *v, int num) {
    int best = v[0];
    for (int i = 1; i < num; i++) {
        best = max2(best, v[i]);
    }
    return best;
}

int main() {
    int v[105];
    int num, sum = 0, mx, mn;
    scanf("%d", &num);
    if (num <= 0) {
        printf("0\n");
        return 0;
    }
    for (int i = 0; i < num; i++) {
        scanf("%d", &v[i]);
    }
    sum = total(v, num);
    mx = mn = v[0];
    for (int i = 0; i < num; i++) {
        mx = v[i] > mx ? v[i] : mx;
        mn = v[i] < mn ? v[i] : mn;
    }
    double avg = (double)sum / num;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    return 0;
}
