typedef int T;
int scope(void) {
    T a = 1;
    {
        int T = 2;
        a += T;
    }
    T *p = &a;
    register int r = *p;
    static const volatile int q = 3;
    return r + q;
}
