int a, *b, c = 3;
unsigned long int big = 10UL;
const char *name = "abc" "def";
static double ratio = 1.5e-3;
