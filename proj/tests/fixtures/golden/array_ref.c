void transpose(int n, int a[][16], int b[][16]) {
    int i, j;
    for (i = 0; i < n; ++i)
        for (j = 0; j < n; ++j)
            b[j][i] = a[i][j];
}
