int absval(int p) {
    if (p < 0) {
        return -p;
    }
    return p;
}

int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main(void) {
    char s[100005];
    int len;
    scanf("%s", s);
    len = length(s);
    for (int k2 = len - 1; k2 >= 0; k2--) {
        putchar(s[k2]);
    }
    putchar('\n');
    printf("%d\n", absval(len));
    return 0;
}
