typedef unsigned char byte;
double conv(int n, void *raw) {
    byte *bytes = (byte *)raw;
    double d = (double)n / 2;
    long l = (long)(unsigned)n;
    int (*rows)[3] = (int (*)[3])raw;
    return d + (float)bytes[0] + l + rows[0][1];
}
