int classify(int c) {
    int kind = 0;
    switch (c) {
    case 'a':
    case 'e':
        kind = 1;
        break;
    case 'z':
        kind = 2;
        /* fall through */
    default:
        kind += 3;
        break;
    }
    switch (kind) case 1: kind = 9;
    return kind;
}
