int unary(int *p, int v) {
    int x = -v;
    x = ~x;
    x = !x;
    x = *p;
    p = &x;
    ++x;
    x--;
    x = sizeof x + sizeof(int) + sizeof(int *);
    return +x;
}
