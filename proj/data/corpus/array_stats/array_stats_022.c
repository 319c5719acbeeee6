int total(int v[], int num) {
    int s = 0;
    for (int i = 0; i < num; i++) {
        s += v[i];
    }
    return s;
}

int main() {
    int v[1000];
    int num, sum = 0, mx, mn;
    scanf("%d", &num);
    for (int i = 0; i < num; i++) {
        scanf("%d", &v[i]);
    }
    sum = total(v, num);
    mx = mn = v[0];
    for (int i = 0; i < num; i++) {
        if (v[i] > mx) {
            mx = v[i];
        }
        if (v[i] < mn) {
            mn = v[i];
        }
    }
    double avg = (double)sum / num;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    int target, where = -1;
    scanf("%d", &target);
    for (int i = 0; i < num; i++) {
        if (v[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
