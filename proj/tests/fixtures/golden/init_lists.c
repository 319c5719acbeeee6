struct pair { int a; int b; };
struct pair table[2] = {{1, 2}, {3, 4}};
void use(void) {
    struct pair p = {5, 6};
    int z[3] = {0};
    p = (struct pair){7, 8};
    z[0] = p.a;
}
