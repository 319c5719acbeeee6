int length(const char *p) {
    int len = 0;
    while (*p++) {
        len++;
    }
    return len;
}

int main() {
    char buf[1000];
    int len, i;
    scanf("%s", buf);
    len = length(buf);
    for (i = 0; i < len / 2; i++) {
        char t = buf[i];
        buf[i] = buf[len - 1 - i];
        buf[len - 1 - i] = t;
    }
    printf("%s\n", buf);
    return 0;
}
