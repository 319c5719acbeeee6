int printf(const char *fmt, int v);
int add(int a, int b) { return a + b; }
int apply(int (*fn)(int, int), int x) { return fn(x, x); }
int main() {
    int r = add(1, add(2, 3));
    printf("%d\n", r);
    r = apply(add, r);
    getchar();
    return 0;
}
