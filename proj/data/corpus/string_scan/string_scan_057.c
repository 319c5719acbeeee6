int is_vowel(char ch) {
    return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';
}

int main() {
    char str[1024];
    int len = 0, i;
    do {
        str[len] = getchar();
    } while (str[len++] != '\n');
    str[--len] = 0;
    for (int i2 = len - 1; i2 >= 0; i2--) {
        putchar(str[i2]);
    }
    putchar('\n');
    return 0;
}
