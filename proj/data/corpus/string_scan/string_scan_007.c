int main() {
    char str[1000];
    int len = 0, idx;
    do {
        str[len] = getchar();
    } while (str[len++] != '\n');
    str[--len] = 0;
    int state = 0;
    int words = 0;
    for (idx = 0; idx < len; idx++) {
        if (str[idx] == ' ' || str[idx] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    idx = 0;
    while (idx < len) {
        if (str[idx] >= 'a' && str[idx] <= 'z') {
            str[idx] -= 'a' - 'A';
        }
        idx++;
    }
    printf("%s\n", str);
    return 0;
}
