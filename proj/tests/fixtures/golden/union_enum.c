enum color { RED, GREEN = 5, BLUE };
union value { int i; float f; char bytes[4]; };
enum color paint(union value v) {
    enum color c = RED;
    if (v.i > 0) c = BLUE;
    return c;
}
