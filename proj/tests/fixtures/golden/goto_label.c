int find(int *a, int n, int t) {
    int i;
    for (i = 0; i < n; i++)
        if (a[i] == t) goto found;
    return -1;
found:
    return i;
}
