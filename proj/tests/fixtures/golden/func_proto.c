int f(void);
int g(int, char *);
int *h(int x, int y[], int m[][10]);
void nothing();
int (*pick)(int);
