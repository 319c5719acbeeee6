int grid[3][4];
int *ptrs[8];
int (*rowp)[4];
char text[] = "hello";
int primes[5] = {2, 3, 5, 7, 11};
int nested[2][2] = {{1, 2}, {3, 4},};
