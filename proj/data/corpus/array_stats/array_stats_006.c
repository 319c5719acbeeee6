int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int total(int nums[], int size) {
    int s = 0;
    int i;
    for (i = 0; i < size; i++)
        s += nums[i];
    return s;
}

int largest(int *nums, int size) {
    int best = nums[0];
    int i;
    i = 1;
    while (i < size) {
        if (nums[i] > best) {
            best = nums[i];
        }
        i++;
    }
    return best;
}

int main() {
    int nums[1000];
    int size, i, j, sum = 0, mx, mn;
    scanf("%d", &size);
    i = 0;
    while (i < size) {
        scanf("%d", &nums[i]);
        i++;
    }
    sum = total(nums, size);
    mx = mn = nums[0];
    i = 0;
    while (i < size) {
        if (nums[i] > mx) {
            mx = nums[i];
        }
        if (nums[i] < mn) {
            mn = nums[i];
        }
        i++;
    }
    double avg = (double)sum / size;
    printf("%d %d %d %.2f\n", sum, mx, mn, avg);
    for (i = 0; i < size - 1; i++) {
        int swapped = 0;
        j = 0;
        while (j < size - 1 - i) {
            if (nums[j] > nums[j + 1]) {
                int t = nums[j];
                nums[j] = nums[j + 1];
                nums[j + 1] = t;
                swapped = 1;
            }
            j++;
        }
        if (!swapped) {
            break;
        }
    }
    printf("%d\n", nums[size / 2]);
    printf("%d\n", absval(mx - mn));
    return 0;
}
