int total(int data[], int count) {
    int s = 0;
    int *p = data;
    while (p < data + count) {
        s += *p++;
    }
    return s;
}

int largest(int *data, int count) {
    int best = data[0];
    for (int i = 1; i < count; i++) {
        if (data[i] > best) {
            best = data[i];
        }
    }
    return best;
}

int main() {
    int data[100];
    int count, sum = 0, mx, mn;
    scanf("%d", &count);
    for (int i = 0; i < count; i++) {
        scanf("%d", &data[i]);
    }
    sum = total(data, count);
    mx = mn = data[0];
    for (int i = 0; i < count; i++) {
        mx = data[i] > mx ? data[i] : mx;
        mn = data[i] < mn ? data[i] : mn;
    }
    printf("%d\n%d\n%d\n", sum, mx, mn);
    for (int i = 1; i < count; i++) {
        int key = data[i];
        int j = i - 1;
        while (j >= 0 && data[j] > key) {
            data[j + 1] = data[j];
            j--;
        }
        data[j + 1] = key;
    }
    printf("%d\n", data[count / 2]);
    int target, where = -1;
    scanf("%d", &target);
    for (int i = 0; i < count; i++) {
        if (data[i] == target) {
            where = i;
            break;
        }
    }
    printf("%d\n", where);
    return 0;
}
