"""The rewriting presentation of the Hopf algebra at a curve point.

Owns the normal-form pattern x^i y^j (ax)^l a^m b^n (with a^m meaning g^-m
for m < 0, j and n in {0, 1}), the seed relations, basis/growth counting,
and the decomposition of elements into B-coefficients times tail words,
where B is the (commutative) subalgebra generated by x and y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import DiamondFailure
from .freealg import ALPHABET, NcPoly, word_key
from .scalar import CurvePoint, ONE, Scalar
from .rewrite import (DEFAULT_FUEL, OrientationPolicy, Rule, RuleSystem,
                      check_diamond, complete)


def basis_index(w: str):
    """Index (i, j, l, m, n) of a pattern word, or None if w does not match."""
    k = 0
    n_len = len(w)
    while k < n_len and w[k] == "x":
        k += 1
    i = k
    j = 0
    if k < n_len and w[k] == "y":
        j = 1
        k += 1
    l = 0
    while w.startswith("ax", k):
        l += 1
        k += 2
    m = 0
    if k < n_len and w[k] == "a":
        while k < n_len and w[k] == "a":
            m += 1
            k += 1
    elif k < n_len and w[k] == "g":
        while k < n_len and w[k] == "g":
            m -= 1
            k += 1
    n = 0
    if k < n_len and w[k] == "b":
        n = 1
        k += 1
    if k != n_len:
        return None
    return (i, j, l, m, n)


def is_basis_word(w: str) -> bool:
    return basis_index(w) is not None


def index_word(i, j, l, m, n) -> str:
    """Inverse of basis_index."""
    mid = "a" * m if m >= 0 else "g" * (-m)
    return "x" * i + "y" * j + "ax" * l + mid + "b" * n


def seed_rules(point: CurvePoint):
    """The thirteen defining relations, oriented toward the pattern.

    The relation by = -yb + 2p*b^2 is stored pre-folded through b^2 = a^3 so
    its rhs is pattern-pure.
    """
    q, p = point.q, point.p
    one = NcPoly.one()

    def r(lhs, rhs, origin="given"):
        return Rule(lhs, rhs, origin)

    return [
        r("ag", one),
        r("ga", one),
        r("ba", NcPoly.word("ab")),
        r("bg", NcPoly.word("gb")),
        r("bx", NcPoly.word("xb")),
        r("yx", NcPoly.word("xy")),
        r("ay", NcPoly.word("ya")),
        r("gy", NcPoly.word("yg")),
        r("yy", NcPoly({"xx": ONE, "xxx": ONE})),
        r("bb", NcPoly.word("aaa")),
        r("by", NcPoly({"yb": -ONE, "aaa": 2 * p}), origin="folded"),
        r("aax", NcPoly({"xaa": -ONE, "axa": -ONE, "aa": -ONE,
                         "aaa": ONE + 3 * q})),
        r("axx", NcPoly({"ax": -ONE, "xa": -ONE, "xxa": -ONE, "xax": -ONE,
                         "aaa": (2 + 3 * q) * q})),
    ]


class NodalAlgebra:
    """A completed, diamond-checked rule system at a fixed curve point."""

    def __init__(self, point, system, completion_log, diamond_report):
        self.point = point
        self.system = system
        self.completion_log = completion_log
        self.diamond_report = diamond_report

    def nf(self, f: NcPoly, fuel=None) -> NcPoly:
        return self.system.normal_form(f, fuel)

    def parse_nf(self, text: str, fuel=None) -> NcPoly:
        from .parser import parse_expr

        return self.nf(parse_expr(text, self.point), fuel)


def build_algebra(point: CurvePoint, fuel=DEFAULT_FUEL, max_rules=64) -> NodalAlgebra:
    """Seed, complete, and verify the rule system at a point.

    Raises DiamondFailure if any ambiguity of the completed system fails to
    resolve, and ValueError if some completed rhs leaves the pattern span.
    """
    seed = RuleSystem(seed_rules(point), fuel_default=fuel)
    policy = OrientationPolicy(is_basis_word)
    completed, log = complete(seed, policy, max_rules=max_rules, fuel=fuel)
    report = check_diamond(completed, fuel)
    if not report.ok:
        raise DiamondFailure(report)
    for rule in completed.rules:
        bad = [w for w in rule.rhs.terms if not is_basis_word(w)]
        if bad:
            raise ValueError(f"rule {rule.lhs!r} has non-pattern rhs words {bad}")
    return NodalAlgebra(point, completed, log, report)


# -- census and growth ---------------------------------------------------

def count_basis_words(length: int) -> int:
    """Number of pattern words of exactly the given length, by direct tuple
    enumeration over (j, n, l, m) with i determined."""
    total = 0
    for j in (0, 1):
        for n in (0, 1):
            rem_jn = length - j - n
            l = 0
            while 2 * l <= rem_jn:
                rem = rem_jn - 2 * l
                # m ranges over |m| <= rem (i makes up the rest)
                total += 2 * rem + 1
                l += 1
    return total


@dataclass
class CensusReport:
    max_len: int
    irreducible_counts: list
    pattern_scan_counts: list
    pattern_enum_counts: list
    mismatches: list
    ok: bool

    def to_json(self):
        return {"check": "census", "status": "pass" if self.ok else "fail",
                "max_len": self.max_len,
                "irreducible_counts": self.irreducible_counts,
                "pattern_scan_counts": self.pattern_scan_counts,
                "pattern_enum_counts": self.pattern_enum_counts,
                "mismatches": self.mismatches[:20]}


def basis_census(alg: NodalAlgebra, max_len: int) -> CensusReport:
    """Exhaustively scan all words of each length <= max_len and confirm
    irreducible == pattern, cross-checked against tuple-enumeration counts."""
    lhs_set = {r.lhs for r in alg.system.rules}
    lhs_lens = sorted({len(s) for s in lhs_set})
    irr_counts, scan_counts, enum_counts, mismatches = [], [], [], []
    ok = True
    for length in range(max_len + 1):
        irr = 0
        pat = 0
        for tup in product(ALPHABET, repeat=length):
            w = "".join(tup)
            reducible = any(w[s:s + k] in lhs_set
                            for k in lhs_lens if k <= length
                            for s in range(length - k + 1))
            pattern = is_basis_word(w)
            if not reducible:
                irr += 1
            if pattern:
                pat += 1
            if reducible == pattern:
                ok = False
                mismatches.append(w)
        enum = count_basis_words(length)
        irr_counts.append(irr)
        scan_counts.append(pat)
        enum_counts.append(enum)
        if not (irr == pat == enum):
            ok = False
    return CensusReport(max_len, irr_counts, scan_counts, enum_counts, mismatches, ok)


@dataclass
class GrowthReport:
    max_len: int
    counts: list       # words of each exact length
    cumulative: list
    exponent: float

    def to_json(self):
        return {"check": "growth", "status": "pass",
                "max_len": self.max_len, "counts": self.counts,
                "cumulative": self.cumulative, "exponent": self.exponent}


def growth(alg: NodalAlgebra, max_len: int) -> GrowthReport:
    """Pattern-word counts up to max_len and the doubling-based growth
    exponent log2(c(2L)/c(L)) at the largest available L."""
    counts = [count_basis_words(length) for length in range(max_len + 1)]
    cumulative = []
    running = 0
    for c in counts:
        running += c
        cumulative.append(running)
    half = max_len // 2
    exponent = math.log2(cumulative[2 * half] / cumulative[half]) if half >= 1 else float("nan")
    return GrowthReport(max_len, counts, cumulative, exponent)


# -- B-module decomposition ----------------------------------------------

def split_pattern_word(w: str):
    """Split a pattern word into (B-prefix x^i y^j, tail (ax)^l a^m b^n)."""
    idx = basis_index(w)
    if idx is None:
        raise ValueError(f"{w!r} is not a pattern word")
    i, j, _, _, _ = idx
    return w[:i + j], w[i + j:]


class BDecomposition:
    """Grouping of a normal form into commutative B-coefficients times tails."""

    def __init__(self, coeffs):
        # dict tail-word -> NcPoly supported on words x^i y^j
        self.coeffs = {t: f for t, f in coeffs.items() if f}

    def recompose(self) -> NcPoly:
        total = NcPoly.zero()
        for t, f in self.coeffs.items():
            total = total + NcPoly({bw + t: c for bw, c in f.terms.items()})
        return total

    def __add__(self, other):
        tails = set(self.coeffs) | set(other.coeffs)
        return BDecomposition({t: self.coeffs.get(t, NcPoly.zero())
                               + other.coeffs.get(t, NcPoly.zero()) for t in tails})

    def __eq__(self, other):
        return isinstance(other, BDecomposition) and self.coeffs == other.coeffs

    def to_json(self):
        return [{"tail": t, "coeff": self.coeffs[t].to_json()}
                for t in sorted(self.coeffs, key=word_key)]


def b_decompose(f: NcPoly, alg: NodalAlgebra, fuel=None) -> BDecomposition:
    """Reduce f and group its words by tail; prefixes become B-coefficients."""
    nf = alg.nf(f, fuel)
    coeffs = {}
    for w, c in nf.terms.items():
        prefix, tail = split_pattern_word(w)
        coeffs.setdefault(tail, {})[prefix] = c
    return BDecomposition({t: NcPoly(d) for t, d in coeffs.items()})


def b_words(max_deg: int):
    """All B-basis words x^i y^j with i + j <= max_deg, shortest first."""
    out = [""]
    for deg in range(1, max_deg + 1):
        out.append("x" * deg)
        out.append("x" * (deg - 1) + "y")
    return out


def tail_words(max_len: int):
    """All tail words (ax)^l a^m b^n of length <= max_len, sorted."""
    out = []
    for l in range(max_len // 2 + 1):
        for n in (0, 1):
            rem = max_len - 2 * l - n
            if rem < 0:
                continue
            for m in range(-rem, rem + 1):
                out.append(index_word(0, 0, l, m, n))
    return sorted(set(out), key=word_key)


@dataclass
class FreenessReport:
    checked_products: int
    roundtrip_samples: int
    failures: list
    right_tail_pure: bool
    ok: bool

    def to_json(self):
        return {"check": "freeness", "status": "pass" if self.ok else "fail",
                "checked_products": self.checked_products,
                "roundtrip_samples": self.roundtrip_samples,
                "right_tail_pure": self.right_tail_pure,
                "failures": self.failures[:20]}


def random_poly(rng, coeff_pool, max_len=6, max_terms=3) -> NcPoly:
    """Seeded random free polynomial: up to max_terms uniform words of length
    <= max_len with coefficients drawn from coeff_pool."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        w = "".join(rng.choice(ALPHABET) for _ in range(length))
        c = rng.choice(coeff_pool)
        terms[w] = terms.get(w, Scalar(0)) + (c if isinstance(c, Scalar) else Scalar(c))
    return NcPoly(terms)


def freeness_check(alg: NodalAlgebra, max_len: int, samples=500, seed=0,
                   fuel=None) -> FreenessReport:
    """Left-freeness evidence: NF(b-word * tail) is the concatenated word for
    all combined lengths <= max_len, and decompose/recompose round-trips on
    random elements.  Also records (without asserting) whether the
    right-handed products NF(tail * b-word) stay tail-pure."""
    import random

    failures = []
    checked = 0
    tails = tail_words(max_len)
    for bw in b_words(max_len):
        for t in tails:
            if len(bw) + len(t) > max_len:
                continue
            checked += 1
            nf = alg.nf(NcPoly.word(bw + t), fuel)
            if nf != NcPoly.word(bw + t):
                failures.append({"kind": "concat", "b": bw, "tail": t})
    rng = random.Random(seed)
    pool = [Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), alg.point.q, alg.point.p]
    for _ in range(samples):
        f = random_poly(rng, pool, max_len=min(max_len, 8))
        if b_decompose(f, alg, fuel).recompose() != alg.nf(f, fuel):
            failures.append({"kind": "roundtrip", "poly": f.to_json()})
    right_pure = True
    for bw in b_words(min(max_len, 4)):
        for t in tail_words(min(max_len, 4)):
            if not bw or not t:
                continue
            nf = alg.nf(NcPoly.word(t + bw), fuel)
            tails_seen = {split_pattern_word(w)[1] for w in nf.terms}
            if tails_seen != {t}:
                right_pure = False
    return FreenessReport(checked, samples, failures, right_pure, not failures)
