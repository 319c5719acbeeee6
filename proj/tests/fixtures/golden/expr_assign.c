void assign(int a, int b) {
    a = b = 0;
    a += 1; a -= 2; a *= 3; a /= 4; a %= 5;
    a <<= 1; a >>= 1; a &= 7; a |= 8; a ^= 9;
}
