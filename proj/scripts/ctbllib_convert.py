#!/usr/bin/env python3
"""Convert ordinary character tables from the GAP Character Table Library
(ctbllib data/*.tbl files) into the momentforge table format.

Only what the tables below need is understood: MOT records with explicit
irreducibles, GALOIS / TENSOR shorthands, and ConstructProj tables whose
faithful characters live in the factor group's "projectives" record.

    ctbllib_convert.py --data /path/to/ctbllib/data --table 2.J2 --out data/external/2J2.tbl
"""

import argparse
import math
import pathlib
import re
import sys
from fractions import Fraction


# --- a tiny reader for GAP list literals --------------------------------

class GapReader:
    def __init__(self, text):
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i] in " \t\r\n":
            self.i += 1

    def peek(self):
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def value(self):
        c = self.peek()
        if c == "[":
            return self.list()
        if c == '"':
            return self.string()
        if c == "(":
            return self.permutation()
        if self.s.startswith("rec(", self.i):
            return self.skip_balanced()
        return self.expr()

    def list(self):
        assert self.s[self.i] == "["
        self.i += 1
        out = []
        pending = True  # a slot is open
        while True:
            c = self.peek()
            if c == "]":
                self.i += 1
                if not pending or out:
                    pass
                return out
            if c == ",":
                if pending:
                    out.append(None)  # hole
                self.i += 1
                pending = True
                continue
            out.append(self.value())
            pending = False

    def string(self):
        self.i += 1
        b = []
        while self.s[self.i] != '"':
            if self.s[self.i] == "\\":
                self.i += 1
            b.append(self.s[self.i])
            self.i += 1
        self.i += 1
        return "".join(b)

    def permutation(self):
        b = self.i
        while True:
            self.ws()
            if self.peek() != "(":
                break
            while self.s[self.i] != ")":
                self.i += 1
            self.i += 1
        return ("perm", self.s[b:self.i])

    def skip_balanced(self):
        depth = 0
        b = self.i
        while True:
            c = self.s[self.i]
            if c in "([":
                depth += 1
            elif c in ")]":
                depth -= 1
                if depth == 0:
                    self.i += 1
                    return ("opaque", self.s[b:self.i])
            elif c == '"':
                self.string()
                continue
            self.i += 1

    def expr(self):
        # an arithmetic expression in integers and E(n)^k, up to ',' or ']'
        b = self.i
        depth = 0
        while self.i < len(self.s):
            c = self.s[self.i]
            if c == "(":
                depth += 1
            elif c == ")":
                depth -= 1
            elif depth == 0 and c in ",]":
                break
            self.i += 1
        token = re.sub(r"\s+", "", self.s[b:self.i])
        if re.fullmatch(r"[A-Z]+", token):
            return ("symbol", token)
        return parse_cyclotomic(token)


TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*)?(?:E\((\d+)\)(?:\^(\d+))?)?")


def parse_cyclotomic(token):
    """'-3*E(5)-3*E(5)^4' -> {(5, 1): -3, (5, 4): -3}; integers map to key (1, 0)."""
    out = {}
    pos = 0
    while pos < len(token):
        m = TERM.match(token, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic '{token}' at {pos}")
        sign, coef, star, n, k = m.groups()
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        if n is None:
            if coef is None:
                raise ValueError(f"dangling sign in '{token}'")
            key = (1, 0)
        else:
            key = (int(n), int(k) if k else 1)
        out[key] = out.get(key, 0) + c
        pos = m.end()
    return ("cyc", out)


def galois(v, a):
    tag, terms = v
    out = {}
    for (n, k), c in terms.items():
        key = (n, (k * a) % n) if n > 1 else (1, 0)
        out[key] = out.get(key, 0) + c
    return (tag, out)


def times(u, v):
    out = {}
    for (n1, k1), c1 in u[1].items():
        for (n2, k2), c2 in v[1].items():
            n = n1 * n2 // math.gcd(n1, n2)
            k = (k1 * (n // n1) + k2 * (n // n2)) % n
            key = (n, k) if n > 1 else (1, 0)
            out[key] = out.get(key, 0) + c1 * c2
    return ("cyc", out)


def negate(v):
    return ("cyc", {k: -c for k, c in v[1].items()})


def fmt(v):
    parts = []
    for (n, k), c in sorted(v[1].items()):
        if c == 0:
            continue
        if n == 1:
            parts.append(f"{c}")
            continue
        root = f"z({n})" + (f"^{k}" if k != 1 else "")
        if c == 1:
            parts.append(root)
        elif c == -1:
            parts.append("-" + root)
        else:
            parts.append(f"{c}*{root}")
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return s


def conductor(values):
    n = 1
    for v in values:
        for (m, _), c in v[1].items():
            if c != 0:
                n = n * m // math.gcd(n, m)
    return n


# --- ctbllib records -----------------------------------------------------

def find_call(text, head, name, extra=""):
    key = f'{head}("{name}",{extra}'
    i = text.find(key)
    if i < 0:
        return None
    r = GapReader(text)
    r.i = i + len(key)
    return r


def read_mot(root, name):
    for f in sorted(pathlib.Path(root).glob("*.tbl")):
        text = f.read_text(errors="replace")
        r = find_call(text, "MOT", name)
        if r is None:
            continue
        fields = [name]
        while r.peek() != ")":
            fields.append(r.value())
            if r.peek() == ",":
                r.i += 1
        fields += [None] * (7 - len(fields))
        return f.name, text, fields
    raise SystemExit(f"table {name} not found under {root}")


def expand(chars):
    out = []
    for entry in chars:
        if isinstance(entry, list) and entry and entry[0] == ("symbol", "GALOIS"):
            src, a = entry[1]
            out.append([galois(v, int(a[1][(1, 0)])) for v in out[int(src[1][(1, 0)]) - 1]])
        elif isinstance(entry, list) and entry and entry[0] == ("symbol", "TENSOR"):
            i, j = (int(x[1][(1, 0)]) - 1 for x in entry[1])
            out.append([times(x, y) for x, y in zip(out[i], out[j])])
        else:
            out.append(entry)
    return out


def as_int(v):
    return int(v[1].get((1, 0), 0))


def element_orders(nclasses, powermaps):
    # v_p(order) is the tail length of the p-power chain before it becomes periodic
    orders = []
    for c in range(nclasses):
        n = 1
        for p, pm in powermaps.items():
            seen = []
            x = c
            while x not in seen:
                seen.append(x)
                x = pm[x]
            n *= p ** seen.index(x)
        orders.append(n)
    return orders


def labels_from_orders(orders):
    count = {}
    out = []
    for o in orders:
        count[o] = count.get(o, 0) + 1
        i = count[o] - 1
        letters = ""
        while True:
            letters = chr(ord("a") + i % 26) + letters
            i = i // 26 - 1
            if i < 0:
                break
        out.append(f"{o}{letters}")
    return out


def convert(root, name):
    fname, text, f = read_mot(root, name)
    comment, centralizers, powermaps_raw, irr = f[1], f[2], f[3], f[4]
    cent = [as_int(c) for c in centralizers]
    order = cent[0]
    nclasses = len(cent)
    powermaps = {p: [as_int(x) - 1 for x in pm] for p, pm in enumerate(powermaps_raw, start=1) if pm}

    if isinstance(irr, list) and irr:
        chars = expand(irr)
    else:
        chars = construct_proj(root, name, fname, text, f, nclasses)

    orders = element_orders(nclasses, powermaps)
    labels = labels_from_orders(orders)
    cond = conductor(v for ch in chars for v in ch)
    lines = [
        f"# {name}: converted by scripts/ctbllib_convert.py from the GAP Character Table Library",
        f"# (ctbllib data file {fname}, table \"{name}\").",
        f"# library note: {' '.join(comment).strip()}",
        "# Class labels are generated from element orders; character names are",
        "# chi<degree><letter> in library order.",
        "[meta]",
        f"name={name}",
        f"order={order}",
        f"conductor={cond}",
        "source=GAP Character Table Library (ctbllib); ATLAS of Finite Groups",
        "[classes]",
    ]
    for c in range(nclasses):
        size = order // cent[c]
        extra = " ".join(f"p{p}={labels[pm[c]]}" for p, pm in sorted(powermaps.items()))
        lines.append(f"{labels[c]} {size} {extra}")
    names = labels_from_orders([as_int(ch[0]) for ch in chars])
    for nm, ch in zip(names, chars):
        lines.append(f"[char chi{nm}]")
        lines.extend(fmt(v) for v in ch)
    return "\n".join(lines) + "\n"


def construct_proj(root, name, fname, text, f, nclasses):
    con = f[6]
    if not (isinstance(con, list) and con and con[0] == "ConstructProj"):
        raise SystemExit(f"{name}: no irreducibles and no ConstructProj construction")
    factor = con[1][0][0]
    r = find_call(text, "ALF", name, f'"{factor}",')
    if r is None:
        raise SystemExit(f"{name}: fusion into {factor} not found")
    fusion = [as_int(x) - 1 for x in r.value()]
    _, ftext, ff = read_mot(root, factor)
    ordinary = expand(ff[4])
    r = find_call(ftext, "ARC", factor, '"projectives",')
    proj = r.value()
    faithful = None
    for k in range(0, len(proj), 2):
        if proj[k] == name:
            faithful = expand(proj[k + 1])
    if faithful is None:
        raise SystemExit(f"{factor}: no projective characters for {name}")
    # preimages of a factor class are consecutive; the library value is the
    # value on the first preimage, the second carries the central sign
    first = {}
    for c in range(nclasses):
        first.setdefault(fusion[c], c)
    chars = [[ch[fusion[c]] for c in range(nclasses)] for ch in ordinary]
    for ch in faithful:
        row = []
        for c in range(nclasses):
            v = ch[fusion[c]]
            row.append(v if first[fusion[c]] == c else negate(v))
        chars.append(row)
    return chars


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--data", required=True, help="ctbllib data directory")
    ap.add_argument("--table", required=True)
    ap.add_argument("--out", required=True)
    a = ap.parse_args()
    out = convert(a.data, a.table)
    pathlib.Path(a.out).write_text(out)
    print(f"wrote {a.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
