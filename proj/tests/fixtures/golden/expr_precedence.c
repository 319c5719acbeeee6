int prec(int a, int b, int c) {
    int r = a + b * c;
    r = (a + b) * c;
    r = a - b - c;
    r = a << 2 | b & c ^ 1;
    r = a < b && b <= c || !c;
    r = a == b != c;
    r = a % b / c;
    return r;
}
