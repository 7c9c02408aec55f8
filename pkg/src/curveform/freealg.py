"""Words over the alphabet {x, y, a, g, b} and noncommutative polynomials.

g stands for a^-1.  A Word is a plain Python string over the five letters;
the empty string is the unit monomial.  Polynomials are sparse maps from
words to nonzero Scalars, iterated in graded-lexicographic order (length
first, then letter order x < y < a < g < b) so printing and JSON output are
deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch
from .scalar import ONE, Scalar, ZERO

ALPHABET = "xyagb"
_ORD = str.maketrans(ALPHABET, "01234")


def word_key(w: str):
    """Sort key: graded (length-first) lexicographic in alphabet order."""
    return (len(w), w.translate(_ORD))


def check_word(w: str) -> str:
    if any(ch not in ALPHABET for ch in w):
        raise ValueError(f"word {w!r} uses letters outside {ALPHABET!r}")
    return w


class NcPoly:
    """Finite Scalar-linear combination of free words; no zero coefficients stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                c = c if isinstance(c, Scalar) else Scalar(c)
                if c:
                    acc = t.get(w)
                    c = c if acc is None else acc + c
                    if c:
                        t[w] = c
                    else:
                        del t[w]
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("NcPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls):
        return _ZERO_POLY

    @classmethod
    def one(cls):
        return _ONE_POLY

    @classmethod
    def word(cls, w, coeff=ONE):
        return cls({check_word(w): coeff})

    @classmethod
    def scalar(cls, c):
        return cls({"": c})

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w, ZERO) + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        return NcPoly(t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NcPoly({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NcPoly":
        c = c if isinstance(c, Scalar) else Scalar(c)
        if not c:
            return _ZERO_POLY
        return NcPoly({w: c * cw for w, cw in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        t = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                s = t.get(w, ZERO) + cu * cv
                if s:
                    t[w] = s
                else:
                    del t[w]
        return NcPoly(t)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("NcPoly power requires a nonnegative integer")
        result = _ONE_POLY
        for _ in range(n):
            result = result * self
        return result

    # -- queries ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, w) -> Scalar:
        return self.terms.get(w, ZERO)

    def sorted_terms(self):
        """Terms in ascending graded-lex word order."""
        return [(w, self.terms[w]) for w in sorted(self.terms, key=word_key)]

    def max_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def constant(self) -> Scalar:
        return self.terms.get("", ZERO)

    # -- formatting / JSON ----------------------------------------------

    def __str__(self):
        from .printing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"NcPoly<{self}>"

    def to_json(self):
        return [{"coeff": c.to_json(), "word": w} for w, c in reversed(self.sorted_terms())]

    @classmethod
    def from_json(cls, obj):
        return cls({check_word(e["word"]): Scalar.from_json(e["coeff"]) for e in obj})


_ZERO_POLY = NcPoly()
_ONE_POLY = NcPoly({"": ONE})


class TensorPoly:
    """Linear combination of k-tuples of words, k in {1, 2, 3}.

    Represents elements of A, A(x)A, A(x)A(x)A; the product is componentwise
    concatenation (no sign rule).
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if arity not in (1, 2, 3):
            raise ValueError("TensorPoly arity must be 1, 2 or 3")
        t = {}
        if terms:
            for key, c in (terms.items() if isinstance(terms, dict) else terms):
                key = tuple(key)
                if len(key) != arity:
                    raise ArityMismatch(f"tuple {key} does not have arity {arity}")
                c = c if isinstance(c, Scalar) else Scalar(c)
                if c:
                    acc = t.get(key)
                    c = c if acc is None else acc + c
                    if c:
                        t[key] = c
                    else:
                        del t[key]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("TensorPoly is immutable")

    @classmethod
    def one(cls, arity):
        return cls(arity, {("",) * arity: ONE})

    @classmethod
    def of_polys(cls, *legs):
        """Tensor product of NcPoly legs, e.g. of_polys(f, h) = f (x) h."""
        arity = len(legs)
        result = cls.one(arity)
        for i, leg in enumerate(legs):
            lifted = cls(arity, {tuple("" if j != i else w for j in range(arity)): c
                                 for w, c in leg.terms.items()})
            result = result * lifted
        return result

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        t = dict(self.terms)
        for key, c in other.terms.items():
            s = t.get(key, ZERO) + c
            if s:
                t[key] = s
            else:
                t.pop(key, None)
        return TensorPoly(self.arity, t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorPoly(self.arity, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c)
        if not c:
            return TensorPoly(self.arity)
        return TensorPoly(self.arity, {k: c * cv for k, cv in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        t = {}
        for ku, cu in self.terms.items():
            for kv, cv in other.terms.items():
                key = tuple(u + v for u, v in zip(ku, kv))
                s = t.get(key, ZERO) + cu * cv
                if s:
                    t[key] = s
                else:
                    del t[key]
        return TensorPoly(self.arity, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("TensorPoly power requires a nonnegative integer")
        result = TensorPoly.one(self.arity)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return (isinstance(other, TensorPoly) and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return [(k, self.terms[k]) for k in
                sorted(self.terms, key=lambda key: tuple(word_key(w) for w in key))]

    def as_poly(self) -> NcPoly:
        if self.arity != 1:
            raise ArityMismatch("only arity-1 TensorPoly converts to NcPoly")
        return NcPoly({k[0]: c for k, c in self.terms.items()})

    def __repr__(self):
        parts = [f"{c} * {' (x) '.join(w or '1' for w in k)}" for k, c in self.sorted_terms()]
        return "TensorPoly<" + (" + ".join(parts) if parts else "0") + ">"
