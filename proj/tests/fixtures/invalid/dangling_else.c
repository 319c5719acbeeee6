int main() {
    else return 0;
}
