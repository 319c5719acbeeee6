#!/usr/bin/env python3
"""Generate the bundled classification corpus.

Four judge-style problems, each solved in many stylistic variants the way a
class of students would: different loop forms, helper functions or not,
structs, pointer walks, custom input readers, and the occasional detour into
code that belongs to another problem (a median needs sorting, a histogram
needs counting). Output is deterministic for a given seed.

    python3 tools/gen_corpus.py --out data/corpus --per-class 60
"""
import argparse
import os
import random

LABELS = ["array_stats", "sort_numbers", "matrix_ops", "string_scan"]


class Code:
    def __init__(self):
        self.lines = []
        self.depth = 0

    def line(self, text=""):
        self.lines.append(("    " * self.depth + text) if text else "")

    def open(self, text):
        self.line(text + " {")
        self.depth += 1

    def close(self, suffix=""):
        self.depth -= 1
        self.line("}" + suffix)

    def text(self):
        return "\n".join(self.lines) + "\n"


class Style:
    """Per-program stylistic choices shared by all emitted fragments."""

    def __init__(self, rng):
        self.rng = rng
        self.loop = rng.choice(["for", "for", "for", "while"])
        self.c99_for = rng.random() < 0.4
        self.braces = rng.random() < 0.6
        self.reader = rng.random() < 0.2
        self.idx = rng.choice(["i", "i", "k", "idx"])
        self.idx2 = "j" if self.idx != "j" else "m"
        self.n = rng.choice(["n", "n", "len", "count", "size", "num"])
        self.arr = rng.choice(["a", "arr", "nums", "data", "v", "x"])

    def read_int(self, target):
        if self.reader:
            return f"{target} = read_int();"
        return f'scanf("%d", &{target});'


def emit_reader(code):
    code.open("int read_int(void)")
    code.line("int c = getchar(), sign = 1, value = 0;")
    code.open("while (c == ' ' || c == '\\n' || c == '\\t')")
    code.line("c = getchar();")
    code.close()
    code.open("if (c == '-')")
    code.line("sign = -1;")
    code.line("c = getchar();")
    code.close()
    code.open("while (c >= '0' && c <= '9')")
    code.line("value = value * 10 + (c - '0');")
    code.line("c = getchar();")
    code.close()
    code.line("return sign * value;")
    code.close()
    code.line()


def counted_loop(code, st, var, start, bound, body, step="++", declare=None):
    """Emit a loop running var over [start, bound)."""
    decl = declare if declare is not None else st.c99_for
    inc = f"{var}++" if step == "++" else f"{var} += {step}"
    if decl or st.loop == "for" or st.rng.random() < 0.5:
        init = f"int {var} = {start}" if decl else f"{var} = {start}"
        header = f"for ({init}; {var} < {bound}; {inc})"
        if st.braces or len(body) != 1 or callable(body[0]) or st.rng.random() < 0.3:
            code.open(header)
            for b in body:
                b(code) if callable(b) else code.line(b)
            code.close()
        else:
            code.line(header)
            code.depth += 1
            code.line(body[0])
            code.depth -= 1
    else:
        code.line(f"{var} = {start};")
        code.open(f"while ({var} < {bound})")
        for b in body:
            b(code) if callable(b) else code.line(b)
        code.line(f"{inc};")
        code.close()


def needs_index_decl(st):
    return not st.c99_for


def maybe_noise_helper(code, rng):
    """Small helpers students paste everywhere."""
    pick = rng.random()
    if pick < 0.15:
        code.open("int max2(int p, int q)")
        code.line("return p > q ? p : q;")
        code.close()
        code.line()
        return "max2"
    if pick < 0.25:
        code.open("int absval(int p)")
        code.open("if (p < 0)")
        code.line("return -p;")
        code.close()
        code.line("return p;")
        code.close()
        code.line()
        return "absval"
    return None


def emit_sort_body(code, st, arr, n, variant=None):
    rng = st.rng
    variant = variant or rng.choice(["bubble", "selection", "insertion"])
    i, j = st.idx, st.idx2
    if variant == "bubble" and rng.random() < 0.4:
        def inner(c):
            c.line("int swapped = 0;")
            counted_loop(c, st, j, 0, f"{n} - 1 - {i}", [
                lambda c2: (c2.open(f"if ({arr}[{j}] > {arr}[{j} + 1])"),
                            c2.line(f"int t = {arr}[{j}];"),
                            c2.line(f"{arr}[{j}] = {arr}[{j} + 1];"),
                            c2.line(f"{arr}[{j} + 1] = t;"),
                            c2.line("swapped = 1;"),
                            c2.close())])
            c.open("if (!swapped)")
            c.line("break;")
            c.close()
        counted_loop(code, st, i, 0, f"{n} - 1", [inner])
    elif variant == "bubble":
        def inner(c):
            counted_loop(c, st, j, 0, f"{n} - 1 - {i}", [
                lambda c2: (c2.open(f"if ({arr}[{j}] > {arr}[{j} + 1])"),
                            c2.line(f"int t = {arr}[{j}];"),
                            c2.line(f"{arr}[{j}] = {arr}[{j} + 1];"),
                            c2.line(f"{arr}[{j} + 1] = t;"),
                            c2.close())])
        counted_loop(code, st, i, 0, f"{n} - 1", [inner])
    elif variant == "selection":
        def inner(c):
            c.line(f"int best = {i};")
            counted_loop(c, st, j, f"{i} + 1", n, [
                lambda c2: (c2.open(f"if ({arr}[{j}] < {arr}[best])"),
                            c2.line(f"best = {j};"), c2.close())], declare=True)
            c.open(f"if (best != {i})")
            c.line(f"int t = {arr}[best];")
            c.line(f"{arr}[best] = {arr}[{i}];")
            c.line(f"{arr}[{i}] = t;")
            c.close()
        counted_loop(code, st, i, 0, f"{n} - 1", [inner])
    else:
        def inner(c):
            c.line(f"int key = {arr}[{i}];")
            c.line(f"int {j} = {i} - 1;")
            c.open(f"while ({j} >= 0 && {arr}[{j}] > key)")
            c.line(f"{arr}[{j} + 1] = {arr}[{j}];")
            c.line(f"{j}--;")
            c.close()
            c.line(f"{arr}[{j} + 1] = key;")
        counted_loop(code, st, i, 1, n, [inner])


# ---------------------------------------------------------------- array_stats

def gen_array_stats(rng):
    st = Style(rng)
    code = Code()
    n, a, i = st.n, st.arr, st.idx
    use_struct = rng.random() < 0.3
    use_func = rng.random() < 0.5
    want_median = rng.random() < 0.25
    use_ptr = rng.random() < 0.25
    if st.reader:
        emit_reader(code)
    noise = maybe_noise_helper(code, rng)
    if use_struct:
        if rng.random() < 0.5:
            code.open("typedef struct")
            code.line("int sum;")
            code.line("int max;")
            code.line("int min;")
            code.close(" Stats;")
            stype = "Stats"
        else:
            code.open("struct stats")
            code.line("int sum, max, min;")
            code.close(";")
            stype = "struct stats"
        code.line()
    if use_func:
        code.open(f"int total(int {a}[], int {n})")
        code.line("int s = 0;")
        if needs_index_decl(st):
            code.line(f"int {i};")
        if use_ptr:
            code.line(f"int *p = {a};")
            code.open(f"while (p < {a} + {n})")
            code.line("s += *p++;")
            code.close()
        else:
            counted_loop(code, st, i, 0, n, [f"s += {a}[{i}];"])
        code.line("return s;")
        code.close()
        code.line()
        if rng.random() < 0.6:
            code.open(f"int largest(int *{a}, int {n})")
            code.line(f"int best = {a}[0];")
            if needs_index_decl(st):
                code.line(f"int {i};")
            if noise == "max2":
                counted_loop(code, st, i, 1, n, [f"best = max2(best, {a}[{i}]);"])
            else:
                counted_loop(code, st, i, 1, n, [
                    lambda c: (c.open(f"if ({a}[{i}] > best)"), c.line(f"best = {a}[{i}];"),
                               c.close())])
            code.line("return best;")
            code.close()
            code.line()
    code.open("int main()" if rng.random() < 0.7 else "int main(void)")
    cap = rng.choice([100, 1000, 10000, 105])
    code.line(f"int {a}[{cap}];")
    decl = f"int {n}" + ("" if st.c99_for else f", {i}")
    if want_median and not st.c99_for:
        decl += f", {st.idx2}"
    if not use_struct:
        decl += ", sum = 0, mx, mn"
    code.line(decl + ";")
    if use_struct:
        code.line(f"{stype} st;")
    code.line(st.read_int(n))
    if rng.random() < 0.3:
        code.open(f"if ({n} <= 0)")
        code.line('printf("0\\n");')
        code.line("return 0;")
        code.close()
    counted_loop(code, st, i, 0, n, [st.read_int(f"{a}[{i}]")])
    pre = "st." if use_struct else ""
    sum_v, max_v, min_v = (pre + "sum", pre + "max", pre + "min") if use_struct else ("sum", "mx", "mn")
    if use_func:
        code.line(f"{sum_v} = total({a}, {n});")
    elif use_struct:
        code.line(f"{sum_v} = 0;")
    code.line(f"{max_v} = {min_v} = {a}[0];")

    def body(c):
        if not use_func:
            c.line(f"{sum_v} += {a}[{i}];")
        if rng.random() < 0.5:
            c.open(f"if ({a}[{i}] > {max_v})")
            c.line(f"{max_v} = {a}[{i}];")
            c.close()
            c.open(f"if ({a}[{i}] < {min_v})")
            c.line(f"{min_v} = {a}[{i}];")
            c.close()
        else:
            c.line(f"{max_v} = {a}[{i}] > {max_v} ? {a}[{i}] : {max_v};")
            c.line(f"{min_v} = {a}[{i}] < {min_v} ? {a}[{i}] : {min_v};")
    counted_loop(code, st, i, 0, n, [body])
    if rng.random() < 0.6:
        code.line(f"double avg = (double){sum_v} / {n};")
        code.line(f'printf("%d %d %d %.2f\\n", {sum_v}, {max_v}, {min_v}, avg);')
    else:
        code.line(f'printf("%d\\n%d\\n%d\\n", {sum_v}, {max_v}, {min_v});')
    if want_median:
        emit_sort_body(code, st, a, n)
        code.line(f'printf("%d\\n", {a}[{n} / 2]);')
    if rng.random() < 0.3:
        code.line("int above = 0;")
        counted_loop(code, st, i, 0, n, [
            lambda c: (c.open(f"if ({a}[{i}] * {n} > {sum_v})"), c.line("above++;"), c.close())])
        code.line('printf("%d\\n", above);')
    if rng.random() < 0.4:
        code.line("int positive = 0;")
        counted_loop(code, st, i, 0, n, [
            lambda c: (c.open(f"if ({a}[{i}] <= 0)"), c.line("continue;"), c.close(),
                       c.line("positive++;"))], declare=True)
        code.line('printf("%d\\n", positive);')
    if rng.random() < 0.35:
        code.line("int target, where = -1;")
        code.line(st.read_int("target"))
        counted_loop(code, st, i, 0, n, [
            lambda c: (c.open(f"if ({a}[{i}] == target)"), c.line(f"where = {i};"),
                       c.line("break;"), c.close())])
        code.line('printf("%d\\n", where);')
    if noise == "absval":
        code.line(f'printf("%d\\n", absval({max_v} - {min_v}));')
    code.line("return 0;")
    code.close()
    return code.text()


# ---------------------------------------------------------------- sort_numbers

def gen_sort_numbers(rng):
    st = Style(rng)
    code = Code()
    n, a, i, j = st.n, st.arr, st.idx, st.idx2
    variant = rng.choice(["bubble", "selection", "insertion", "bubble_swap", "qsort_like"])
    descending = rng.random() < 0.25
    if st.reader:
        emit_reader(code)
    noise = maybe_noise_helper(code, rng)
    use_swap = variant in ("bubble_swap", "qsort_like") or rng.random() < 0.3
    if use_swap:
        code.open("void swap(int *p, int *q)")
        code.line("int t = *p;")
        code.line("*p = *q;")
        code.line("*q = t;")
        code.close()
        code.line()
    cmp = "<" if descending else ">"
    if variant == "qsort_like":
        code.open(f"void quick(int {a}[], int lo, int hi)")
        code.open("if (lo >= hi)")
        code.line("return;")
        code.close()
        code.line(f"int pivot = {a}[(lo + hi) / 2], l = lo, r = hi;")
        code.open("while (l <= r)")
        lt = ">" if descending else "<"
        code.line(f"while ({a}[l] {lt} pivot) l++;")
        code.line(f"while ({a}[r] {cmp} pivot) r--;")
        code.open("if (l <= r)")
        code.line(f"swap(&{a}[l], &{a}[r]);")
        code.line("l++;")
        code.line("r--;")
        code.close()
        code.close()
        code.line(f"quick({a}, lo, r);")
        code.line(f"quick({a}, l, hi);")
        code.close()
        code.line()
    elif rng.random() < 0.5:
        code.open(f"void sort(int *{a}, int {n})")
        if needs_index_decl(st):
            code.line(f"int {i}, {j};")
        if variant == "bubble_swap":
            def inner(c):
                counted_loop(c, st, j, 0, f"{n} - {i} - 1", [
                    lambda c2: (c2.open(f"if ({a}[{j}] {cmp} {a}[{j} + 1])"),
                                c2.line(f"swap(&{a}[{j}], &{a}[{j} + 1]);"), c2.close())])
            counted_loop(code, st, i, 0, n, [inner])
        else:
            emit_sort_body(code, st, a, n, variant)
        code.close()
        code.line()
        variant = "call_sort"
    code.open("int main()")
    cap = rng.choice([100, 1000, 1005, 50000])
    if rng.random() < 0.2:
        code.line(f"static int {a}[{cap}];")
        code.line(f"int {n};" if st.c99_for else f"int {n}, {i}, {j};")
    else:
        code.line(f"int {a}[{cap}], {n}" + ("" if st.c99_for else f", {i}, {j}") + ";")
    code.line(st.read_int(n))
    counted_loop(code, st, i, 0, n, [st.read_int(f"{a}[{i}]")])
    if variant == "qsort_like":
        code.line(f"quick({a}, 0, {n} - 1);")
    elif variant == "call_sort":
        code.line(f"sort({a}, {n});")
    elif variant == "bubble_swap":
        def inner(c):
            counted_loop(c, st, j, 0, f"{n} - {i} - 1", [
                lambda c2: (c2.open(f"if ({a}[{j}] {cmp} {a}[{j} + 1])"),
                            c2.line(f"swap(&{a}[{j}], &{a}[{j} + 1]);"), c2.close())])
        counted_loop(code, st, i, 0, n, [inner])
    else:
        emit_sort_body(code, st, a, n, variant)
    style = rng.random()
    if style < 0.4:
        def out(c):
            c.open(f"if ({i} > 0)")
            c.line('printf(" ");')
            c.close()
            c.line(f'printf("%d", {a}[{i}]);')
        counted_loop(code, st, i, 0, n, [out])
        code.line('printf("\\n");')
    elif style < 0.7:
        counted_loop(code, st, i, 0, n,
                     [f'printf({i} == {n} - 1 ? "%d\\n" : "%d ", {a}[{i}]);'])
    else:
        counted_loop(code, st, i, 0, n, [f'printf("%d\\n", {a}[{i}]);'])
    if rng.random() < 0.35:
        code.line("int distinct = 0;")
        counted_loop(code, st, i, 0, n, [
            lambda c: (c.open(f"if ({i} > 0 && {a}[{i}] == {a}[{i} - 1])"), c.line("continue;"),
                       c.close(), c.line("distinct++;"))], declare=True)
        code.line('printf("%d\\n", distinct);')
    if rng.random() < 0.25:
        code.line("int dups = 0;")
        counted_loop(code, st, i, 1, n, [
            lambda c: (c.open(f"if ({a}[{i}] == {a}[{i} - 1])"), c.line("dups++;"), c.close())])
        code.line('printf("%d\\n", dups);')
    if noise == "max2":
        code.line(f'printf("%d\\n", max2({a}[0], {a}[{n} - 1]));')
    elif noise == "absval":
        code.line(f'printf("%d\\n", absval({a}[{n} - 1] - {a}[0]));')
    code.line("return 0;")
    code.close()
    return code.text()


# ---------------------------------------------------------------- matrix_ops

def gen_matrix_ops(rng):
    st = Style(rng)
    code = Code()
    i, j = st.idx, st.idx2
    k = "k" if i != "k" else "t"
    op = rng.choice(["multiply", "transpose", "diagonal", "add", "rowsum"])
    dim = rng.choice([10, 20, 100, 105])
    use_define_const = rng.random() < 0.3
    size = "MAXN" if use_define_const else str(dim)
    if st.reader:
        emit_reader(code)
    noise = maybe_noise_helper(code, rng)
    if use_define_const:
        code.line(f"enum {{ MAXN = {dim} }};")
        code.line()
    use_global = rng.random() < 0.4
    mats = ["a", "b", "c"] if op in ("multiply", "add") else ["a", "b"]
    if use_global:
        code.line("int " + ", ".join(f"{m}[{size}][{size}]" for m in mats) + ";")
        code.line()
    use_read_func = rng.random() < 0.4
    if use_read_func:
        code.open(f"void read_matrix(int m[][{size}], int rows, int cols)")
        if needs_index_decl(st):
            code.line(f"int {i}, {j};")
        counted_loop(code, st, i, 0, "rows", [
            lambda c: counted_loop(c, st, j, 0, "cols", [st.read_int(f"m[{i}][{j}]")])])
        code.close()
        code.line()
    use_print_func = rng.random() < 0.4
    if use_print_func:
        code.open(f"void print_matrix(int m[][{size}], int rows, int cols)")
        if needs_index_decl(st):
            code.line(f"int {i}, {j};")

        def row(c):
            counted_loop(c, st, j, 0, "cols", [
                lambda c2: (c2.open(f"if ({j} > 0)"), c2.line("putchar(' ');"), c2.close(),
                            c2.line(f'printf("%d", m[{i}][{j}]);'))])
            c.line("putchar('\\n');")
        counted_loop(code, st, i, 0, "rows", [row])
        code.close()
        code.line()
    R = rng.choice(["r", "rows", "n"])
    C = rng.choice(["cols", "m", "q"])
    code.open("int main()")
    if not use_global:
        code.line("int " + ", ".join(f"{m}[{size}][{size}]" for m in mats) + ";")
    idx_decl = "" if st.c99_for else f", {i}, {j}" + (f", {k}" if op == "multiply" else "")
    code.line(f"int {R}, {C}{idx_decl};")

    def read(mname, rows, cols):
        if use_read_func:
            code.line(f"read_matrix({mname}, {rows}, {cols});")
        else:
            counted_loop(code, st, i, 0, rows, [
                lambda c: counted_loop(c, st, j, 0, cols, [st.read_int(f"{mname}[{i}][{j}]")])])

    def write(mname, rows, cols):
        if use_print_func:
            code.line(f"print_matrix({mname}, {rows}, {cols});")
        else:
            def row(c):
                counted_loop(c, st, j, 0, cols, [f'printf("%d ", {mname}[{i}][{j}]);'])
                c.line('printf("\\n");')
            counted_loop(code, st, i, 0, rows, [row])

    if op == "multiply":
        code.line("int p;")
        if st.reader:
            for var in (R, C, "p"):
                code.line(st.read_int(var))
        else:
            code.line(f'scanf("%d %d %d", &{R}, &{C}, &p);')
        read("a", R, C)
        read("b", C, "p")

        def cell(c2):
            c2.line(f"c[{i}][{j}] = 0;")
            counted_loop(c2, st, k, 0, C, [f"c[{i}][{j}] += a[{i}][{k}] * b[{k}][{j}];"])
        counted_loop(code, st, i, 0, R, [lambda c1: counted_loop(c1, st, j, 0, "p", [cell])])
        write("c", R, "p")
    elif op == "add":
        code.line(st.read_int(R))
        code.line(st.read_int(C))
        read("a", R, C)
        read("b", R, C)
        counted_loop(code, st, i, 0, R, [
            lambda c1: counted_loop(c1, st, j, 0, C, [f"c[{i}][{j}] = a[{i}][{j}] + b[{i}][{j}];"])])
        write("c", R, C)
    elif op == "transpose":
        code.line(st.read_int(R))
        code.line(st.read_int(C))
        read("a", R, C)
        counted_loop(code, st, i, 0, R, [
            lambda c1: counted_loop(c1, st, j, 0, C, [f"b[{j}][{i}] = a[{i}][{j}];"])])
        write("b", C, R)
    elif op == "diagonal":
        code.line(st.read_int(R))
        code.line(f"{C} = {R};")
        read("a", R, R)
        code.line("int d1 = 0, d2 = 0;")
        counted_loop(code, st, i, 0, R, [f"d1 += a[{i}][{i}];", f"d2 += a[{i}][{R} - 1 - {i}];"])
        code.line('printf("%d %d\\n", d1, d2);')
        if rng.random() < 0.5:
            counted_loop(code, st, i, 0, R, [
                lambda c1: counted_loop(c1, st, j, 0, R, [f"b[{i}][{j}] = a[{j}][{i}];"])])
            write("b", R, R)
    else:
        code.line(st.read_int(R))
        code.line(st.read_int(C))
        read("a", R, C)

        def rowsum(c1):
            c1.line("int s = 0;")
            counted_loop(c1, st, j, 0, C, [f"s += a[{i}][{j}];"])
            c1.line('printf("%d\\n", s);')
        counted_loop(code, st, i, 0, R, [rowsum])
        if rng.random() < 0.5:
            def colmax(c1):
                c1.line(f"int best = a[0][{j}];")
                counted_loop(c1, st, i, 1, R, [
                    lambda c2: (c2.open(f"if (a[{i}][{j}] > best)"), c2.line(f"best = a[{i}][{j}];"),
                                c2.close())])
                c1.line('printf("%d ", best);')
            counted_loop(code, st, j, 0, C, [colmax])
    if rng.random() < 0.3:
        code.line("int off = 0;")
        counted_loop(code, st, i, 0, R, [
            lambda c1: counted_loop(c1, st, j, 0, C, [
                lambda c2: (c2.open(f"if ({i} == {j})"), c2.line("continue;"), c2.close(),
                            c2.line(f"off += a[{i}][{j}];"))], declare=True)], declare=True)
        code.line('printf("%d\\n", off);')
    if rng.random() < 0.4:
        code.line("int mode;")
        code.line(st.read_int("mode"))
        code.open("switch (mode)")
        code.line("case 1:")
        code.line('    printf("%d\\n", a[0][0]);')
        code.line("    break;")
        code.line("case 2:")
        code.line(f'    printf("%d %d\\n", {R}, {C});')
        code.line("    break;")
        if rng.random() < 0.5:
            code.line("case 3:")
        code.line("default:")
        code.line('    printf("?\\n");')
        code.line("    break;")
        code.close()
    if rng.random() < 0.12:
        code.line("int zi = -1, zj = -1;")
        counted_loop(code, st, i, 0, R, [
            lambda c1: counted_loop(c1, st, j, 0, C, [
                lambda c2: (c2.open(f"if (a[{i}][{j}] == 0)"), c2.line(f"zi = {i};"),
                            c2.line(f"zj = {j};"), c2.line("goto found;"), c2.close())])])
        code.line("found:")
        code.line('printf("%d %d\\n", zi, zj);')
    if noise == "max2":
        code.line(f'printf("%d\\n", max2({R}, {C}));')
    elif noise == "absval":
        code.line(f'printf("%d\\n", absval({R} - {C}));')
    code.line("return 0;")
    code.close()
    return code.text()


# ---------------------------------------------------------------- string_scan

def gen_string_scan(rng):
    st = Style(rng)
    code = Code()
    i = st.idx
    s = rng.choice(["s", "str", "line", "buf", "text"])
    task = rng.choice(["vowels", "classes", "words", "reverse", "palindrome", "histogram"])
    read_mode = rng.choice(["scanf", "getchar", "gets_loop"])
    use_switch = task in ("vowels", "classes") and rng.random() < 0.6
    use_enum = rng.random() < 0.15
    noise = maybe_noise_helper(code, rng)
    if use_enum:
        code.line("enum state { OUTSIDE, INSIDE };")
        code.line()
    use_helper = rng.random() < 0.4
    if use_helper:
        if rng.random() < 0.5:
            code.open("int is_vowel(char ch)")
            if rng.random() < 0.5:
                code.open("switch (ch)")
                for v in "aeiouAEIOU":
                    code.line(f"case '{v}':")
                code.line("    return 1;")
                code.close()
                code.line("return 0;")
            else:
                code.line("return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';")
            code.close()
            helper = "is_vowel"
        else:
            code.open("int length(const char *p)")
            code.line("int len = 0;")
            code.open("while (*p++)")
            code.line("len++;")
            code.close()
            code.line("return len;")
            code.close()
            helper = "length"
        code.line()
    else:
        helper = None
    code.open("int main()" if rng.random() < 0.7 else "int main(void)")
    cap = rng.choice([256, 1000, 1024, 100005])
    code.line(f"char {s}[{cap}];")
    decl = "int " + ("len = 0" if read_mode != "scanf" else "len") + ("" if st.c99_for else f", {i}") + ";"
    code.line(decl)
    if read_mode == "scanf":
        code.line(f'scanf("%s", {s});')
        if helper == "length":
            code.line(f"len = length({s});")
        else:
            code.line("len = 0;")
            code.open(f"while ({s}[len] != '\\0')")
            code.line("len++;")
            code.close()
    elif read_mode == "getchar" and rng.random() < 0.5:
        code.open("while (1)")
        code.line("int ch = getchar();")
        code.open("if (ch == '\\n' || ch == -1)")
        code.line("break;")
        code.close()
        code.line(f"{s}[len++] = (char)ch;")
        code.close()
        code.line(f"{s}[len] = '\\0';")
    elif read_mode == "getchar":
        code.line("int ch;")
        code.open("while ((ch = getchar()) != '\\n' && ch != -1)")
        code.line(f"{s}[len++] = (char)ch;")
        code.close()
        code.line(f"{s}[len] = '\\0';")
    else:
        code.open("do")
        code.line(f"{s}[len] = getchar();")
        code.close(f" while ({s}[len++] != '\\n');")
        code.line(f"{s}[--len] = 0;")

    if task == "vowels":
        code.line("int vowels = 0;")
        if helper == "is_vowel":
            counted_loop(code, st, i, 0, "len", [
                lambda c: (c.open(f"if (is_vowel({s}[{i}]))"), c.line("vowels++;"), c.close())])
        elif use_switch:
            def sw(c):
                c.open(f"switch ({s}[{i}])")
                for v in "aeiou":
                    c.line(f"case '{v}':")
                c.line("    vowels++;")
                c.line("    break;")
                c.line("default:")
                c.line("    break;")
                c.close()
            counted_loop(code, st, i, 0, "len", [sw])
        else:
            code.line(f"char *p = {s};")
            code.open("while (*p)")
            code.open("if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u')")
            code.line("vowels++;")
            code.close()
            code.line("p++;")
            code.close()
        code.line('printf("%d\\n", vowels);')
    elif task == "classes":
        code.line("int letters = 0, digits = 0, spaces = 0, others = 0;")

        def cls(c):
            c.line(f"char ch = {s}[{i}];")
            c.open("if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z'))")
            c.line("letters++;")
            c.close()
            c.open("else if (ch >= '0' && ch <= '9')")
            c.line("digits++;")
            c.close()
            c.open("else if (ch == ' ')")
            c.line("spaces++;")
            c.close()
            c.open("else")
            c.line("others++;")
            c.close()
        counted_loop(code, st, i, 0, "len", [cls])
        code.line('printf("%d %d %d %d\\n", letters, digits, spaces, others);')
    elif task == "words":
        state_init = "OUTSIDE" if use_enum else "0"
        inside = "INSIDE" if use_enum else "1"
        code.line(("enum state" if use_enum else "int") + f" state = {state_init};")
        code.line("int words = 0;")

        def w(c):
            c.open(f"if ({s}[{i}] == ' ' || {s}[{i}] == '\\t')")
            c.line(f"state = {state_init};")
            c.close()
            c.open(f"else if (state == {state_init})")
            c.line(f"state = {inside};")
            c.line("words++;")
            c.close()
        counted_loop(code, st, i, 0, "len", [w])
        code.line('printf("%d\\n", words);')
    elif task == "reverse":
        if rng.random() < 0.5:
            counted_loop(code, st, i, 0, "len / 2", [
                f"char t = {s}[{i}];", f"{s}[{i}] = {s}[len - 1 - {i}];", f"{s}[len - 1 - {i}] = t;"])
            code.line(f'printf("%s\\n", {s});')
        else:
            code.open(f"for (int {i}2 = len - 1; {i}2 >= 0; {i}2--)")
            code.line(f"putchar({s}[{i}2]);")
            code.close()
            code.line("putchar('\\n');")
    elif task == "palindrome":
        code.line("int ok = 1;")
        code.line("int lo = 0, hi = len - 1;")
        code.open("while (lo < hi)")
        code.open(f"if ({s}[lo] != {s}[hi])")
        code.line("ok = 0;")
        code.line("break;")
        code.close()
        code.line("lo++;")
        code.line("hi--;")
        code.close()
        code.line('puts(ok ? "yes" : "no");')
    else:
        code.line("int cnt[26] = {0};")
        code.line("int best = 0;")

        skip = rng.random() < 0.5

        def h(c):
            if skip:
                c.open(f"if ({s}[{i}] < 'a' || {s}[{i}] > 'z')")
                c.line("continue;")
                c.close()
                c.line(f"cnt[{s}[{i}] - 'a']++;")
                return
            c.open(f"if ({s}[{i}] >= 'a' && {s}[{i}] <= 'z')")
            c.line(f"cnt[{s}[{i}] - 'a']++;")
            c.close()
        counted_loop(code, st, i, 0, "len", [h], declare=True if skip else None)
        counted_loop(code, st, i, 1, 26, [
            lambda c: (c.open(f"if (cnt[{i}] > cnt[best])"), c.line(f"best = {i};"), c.close())])
        code.line("printf(\"%c %d\\n\", 'a' + best, cnt[best]);")
    if rng.random() < 0.2:
        counted_loop(code, st, i, 0, "len", [
            lambda c: (c.open(f"if ({s}[{i}] >= 'a' && {s}[{i}] <= 'z')"),
                       c.line(f"{s}[{i}] -= 'a' - 'A';"), c.close())])
        code.line(f'printf("%s\\n", {s});')
    if noise == "max2":
        code.line('printf("%d\\n", max2(len, 0));')
    elif noise == "absval":
        code.line('printf("%d\\n", absval(len));')
    code.line("return 0;")
    code.close()
    return code.text()


GENERATORS = {
    "array_stats": gen_array_stats,
    "sort_numbers": gen_sort_numbers,
    "matrix_ops": gen_matrix_ops,
    "string_scan": gen_string_scan,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/corpus")
    ap.add_argument("--per-class", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20140918)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for label in LABELS:
        folder = os.path.join(args.out, label)
        os.makedirs(folder, exist_ok=True)
        for index in range(args.per_class):
            text = GENERATORS[label](rng)
            path = os.path.join(folder, f"{label}_{index:03d}.c")
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)


if __name__ == "__main__":
    main()
