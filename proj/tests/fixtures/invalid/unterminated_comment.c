int main() {
    /* never closed
    return 0;
}
