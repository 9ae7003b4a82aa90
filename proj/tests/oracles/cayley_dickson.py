"""Independent oracle for the doubled algebras used in the C++ tests.

Elements are nested pairs of Fractions; the product is
(a, b)(c, d) = (ac - d*b, da + bc*) with (a, b)* = (a*, -b).
Prints the basis multiplication table of each doubling as
(sign, index) pairs so they can be frozen into the unit tests.
"""
from fractions import Fraction
import itertools
import sys


def conj(x):
    if isinstance(x, tuple):
        return (conj(x[0]), neg(x[1]))
    return x


def neg(x):
    if isinstance(x, tuple):
        return (neg(x[0]), neg(x[1]))
    return -x


def add(x, y):
    if isinstance(x, tuple):
        return (add(x[0], y[0]), add(x[1], y[1]))
    return x + y


def sub(x, y):
    return add(x, neg(y))


def mul(x, y):
    if isinstance(x, tuple):
        a, b = x
        c, d = y
        return (sub(mul(a, c), mul(conj(d), b)), add(mul(d, a), mul(b, conj(c))))
    return x * y


def flatten(x):
    if isinstance(x, tuple):
        return flatten(x[0]) + flatten(x[1])
    return [x]


def build(coords):
    if len(coords) == 1:
        return Fraction(coords[0])
    h = len(coords) // 2
    return (build(coords[:h]), build(coords[h:]))


def basis(dim, p):
    return build([1 if q == p else 0 for q in range(dim)])


def table(dim):
    rows = []
    for p in range(dim):
        row = []
        for q in range(dim):
            v = flatten(mul(basis(dim, p), basis(dim, q)))
            nz = [(i, c) for i, c in enumerate(v) if c != 0]
            assert len(nz) == 1
            i, c = nz[0]
            row.append(int(c) * (i + 1))
        rows.append(row)
    return rows


if __name__ == "__main__":
    dim = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    for row in table(dim):
        print(", ".join(f"{v:3d}" for v in row))
    # associator witness used in the tests
    if dim == 8:
        e = lambda p: basis(8, p)
        lhs = mul(mul(e(1), e(2)), e(4))
        rhs = mul(e(1), mul(e(2), e(4)))
        print("(e1,e2,e4) =", flatten(sub(lhs, rhs)))
        count = sum(
            1
            for a, b, c in itertools.product(range(8), repeat=3)
            if any(flatten(sub(mul(mul(e(a), e(b)), e(c)), mul(e(a), mul(e(b), e(c))))))
        )
        print("non-associative basis triples:", count)
