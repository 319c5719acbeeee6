int main() {
    char line[1000];
    int len;
    scanf("%s", line);
    len = 0;
    while (line[len] != '\0') {
        len++;
    }
    int state = 0;
    int words = 0;
    for (int i = 0; i < len; i++) {
        if (line[i] == ' ' || line[i] == '\t') {
            state = 0;
        }
        else if (state == 0) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    return 0;
}
