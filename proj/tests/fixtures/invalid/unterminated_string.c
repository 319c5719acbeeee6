int main() {
    char *s = "oops;
    return 0;
}
