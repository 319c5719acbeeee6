int main() {
    char line[1000];
    int len = 0, k;
    int ch;
    while ((ch = getchar()) != '\n' && ch != -1) {
        line[len++] = (char)ch;
    }
    line[len] = '\0';
    int state = 0;
    int words = 0;
    for (k = 0; k < len; k++) {
        if (line[k] == ' ' || line[k] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    for (k = 0; k < len; k++) {
        if (line[k] >= 'a' && line[k] <= 'z') {
            line[k] -= 'a' - 'A';
        }
    }
    printf("%s\n", line);
    return 0;
}
