int main(void) {
    char line[1000];
    int len = 0, idx;
    do {
        line[len] = getchar();
    } while (line[len++] != '\n');
    line[--len] = 0;
    int state = 0;
    int words = 0;
    for (idx = 0; idx < len; idx++) {
        if (line[idx] == ' ' || line[idx] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    for (idx = 0; idx < len; idx++) {
        if (line[idx] >= 'a' && line[idx] <= 'z') {
            line[idx] -= 'a' - 'A';
        }
    }
    printf("%s\n", line);
    return 0;
}
