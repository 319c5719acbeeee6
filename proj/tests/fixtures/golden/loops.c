int loops(int n) {
    int s = 0, i;
    for (i = 0; i < n; i++) s += i;
    for (int j = 0, k = n; j < k; j++, k--) { s -= j; }
    for (;;) { break; }
    while (n > 0) { n--; if (n == 3) continue; }
    do { s++; } while (s < 100);
    return s;
}
