int main(void) {
    char str[100005];
    int len = 0;
    do {
        str[len] = getchar();
    } while (str[len++] != '\n');
    str[--len] = 0;
    int state = 0;
    int words = 0;
    for (int k = 0; k < len; k++) {
        if (str[k] == ' ' || str[k] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    for (int k = 0; k < len; k++) {
        if (str[k] >= 'a' && str[k] <= 'z') {
            str[k] -= 'a' - 'A';
        }
    }
    printf("%s\n", str);
    return 0;
}
