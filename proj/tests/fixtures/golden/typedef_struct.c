typedef struct point {
    int x;
    int y;
} Point;

typedef Point *PointPtr;

struct rect { Point lo, hi; };

Point origin = {0, 0};

int area(struct rect *r) {
    PointPtr p = &r->lo;
    return (r->hi.x - p->x) * (r->hi.y - r->lo.y);
}
