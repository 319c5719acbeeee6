int pick(int a, int b) {
    int m = a > b ? a : b;
    m = a ? b ? 1 : 2 : 3;
    a = 1, b = 2, m = 3;
    (a, b), m;
    return m;
}
