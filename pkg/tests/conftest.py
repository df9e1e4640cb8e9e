import random

import pytest
import sympy

from forcealg import GF, QQ, PolyRing, Polynomial

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    entry = _ACCEPTANCE.setdefault(num, {"title": title, "passed": True, "ran": False})
    if call.when == "call":
        entry["ran"] = True
    if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[num]
        status = "PASS" if e["passed"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {e['title']}")


# -- helpers shared by the suites -------------------------------------------------


def random_poly(ring: PolyRing, rng: random.Random, terms=3, max_deg=3, coeff=5) -> Polynomial:
    out = {}
    for _ in range(terms):
        e = [0] * ring.nvars
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            e[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            out[tuple(e)] = out.get(tuple(e), 0) + c
    return Polynomial(ring, out)


def to_sympy(f: Polynomial):
    syms = sympy.symbols(f.ring.vars)
    expr = sympy.Integer(0)
    for e, c in f.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator)) if f.ring.field.is_rational else sympy.Integer(int(c))
        for s, k in zip(syms, e):
            term *= s**k
        expr += term
    return expr


def sympy_groebner(polys, ring: PolyRing, order="grevlex"):
    syms = sympy.symbols(ring.vars)
    kw = {"modulus": ring.field.characteristic} if ring.field.characteristic else {}
    gens = [to_sympy(p) for p in polys if p]
    if not gens:
        return []
    G = sympy.groebner(gens, *syms, order=order, **kw)
    return list(G.exprs)


def same_polys(ours, theirs, ring):
    """Compare lists of polynomials as sets of sympy expressions (mod p when needed)."""
    syms = sympy.symbols(ring.vars)
    p = ring.field.characteristic

    def canon(e):
        P = sympy.Poly(e, *syms, modulus=p) if p else sympy.Poly(e, *syms, domain="QQ")
        return P.monic().as_dict()

    a = sorted(map(str, (canon(to_sympy(g)) for g in ours)))
    b = sorted(map(str, (canon(e) for e in theirs)))
    return a == b


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def Rxy():
    return PolyRing(QQ, ("x", "y"))


@pytest.fixture
def Rxy5():
    return PolyRing(GF(5), ("x", "y"))
