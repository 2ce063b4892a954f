"""Sparse polynomials in one variable (t) and two variables (x, y).

Coefficients are Python ints (arbitrary precision) or ``Fraction`` where the
index operators introduce them. Zero coefficients are never stored.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _fmt_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _join(parts: list[tuple[Coeff, str]], tex: bool = False) -> str:
    if not parts:
        return "0"
    out = []
    for k, (c, mono) in enumerate(parts):
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            if tex and isinstance(a, Fraction):
                body = rf"\frac{{{a.numerator}}}{{{a.denominator}}} {mono}"
            else:
                body = f"{_fmt_coeff(a)} {mono}"
        else:
            if tex and isinstance(a, Fraction):
                body = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                body = _fmt_coeff(a)
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _var(name: str, e: int, tex: bool = False) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{{{e}}}" if tex else f"{name}^{e}"


class BiPoly:
    """Polynomial sum c * x^a * y^b over exponent pairs (a, b)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Coeff] | None = None):
        clean: dict[tuple[int, int], Coeff] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent ({a}, {b})")
                if c:
                    clean[(int(a), int(b))] = _norm(c)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> BiPoly:
        p = cls.__new__(cls)
        p._terms = {k: _norm(c) for k, c in terms.items() if c}
        return p

    @classmethod
    def monomial(cls, c: Coeff, a: int, b: int) -> BiPoly:
        return cls({(a, b): c})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[int, int, Coeff]]) -> BiPoly:
        acc: dict[tuple[int, int], Coeff] = {}
        for a, b, c in items:
            acc[(a, b)] = acc.get((a, b), 0) + c
        return cls(acc)

    # --- container protocol ---

    @property
    def terms(self) -> dict[tuple[int, int], Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Coeff]]:
        """Terms in display order: ascending (a, b)."""
        for k in sorted(self._terms):
            yield k, self._terms[k]

    def coeff(self, a: int, b: int) -> Coeff:
        return self._terms.get((a, b), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # --- ring operations ---

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, Rational):
            return BiPoly({(0, 0): other})
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    def __add__(self, other) -> BiPoly:
        q = self._coerce(other)
        acc = dict(self._terms)
        for k, c in q._terms.items():
            acc[k] = acc.get(k, 0) + c
        return BiPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> BiPoly:
        q = self._coerce(other)
        acc: dict[tuple[int, int], Coeff] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in q._terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return BiPoly._raw(acc)

    __rmul__ = __mul__

    # --- transforms ---

    def substitute_powers(self, a: int, b: int) -> BiPoly:
        """Return p(x^a, y^b)."""
        if a < 1 or b < 1:
            raise ValueError(f"substitution powers must be >= 1, got ({a}, {b})")
        return BiPoly._raw({(i * a, j * b): c for (i, j), c in self._terms.items()})

    def canonical(self) -> BiPoly:
        """Fold every x^a y^b with a > b onto x^b y^a."""
        acc: dict[tuple[int, int], Coeff] = {}
        for (a, b), c in self._terms.items():
            k = (a, b) if a <= b else (b, a)
            acc[k] = acc.get(k, 0) + c
        return BiPoly._raw(acc)

    def is_canonical(self) -> bool:
        return all(a <= b for a, b in self._terms)

    def evaluate(self, x0, y0) -> Coeff:
        x0, y0 = Fraction(x0), Fraction(y0)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * x0**a * y0**b
        return _norm(total)

    # --- serialisation ---

    def to_text(self) -> str:
        return _join([(c, " ".join(filter(None, (_var("x", a), _var("y", b)))))
                      for (a, b), c in self.items()])

    def to_latex(self) -> str:
        return _join([(c, " ".join(filter(None, (_var("x", a, True), _var("y", b, True)))))
                      for (a, b), c in self.items()], tex=True)

    def to_json_obj(self) -> dict:
        return {"terms": [{"i": a, "j": b, "c": _json_coeff(c)} for (a, b), c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str | dict) -> BiPoly:
        obj = json.loads(text) if isinstance(text, str) else text
        return cls.from_terms((t["i"], t["j"], _parse_coeff(t["c"])) for t in obj["terms"])


class UniPoly:
    """Polynomial sum c * t^i."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        clean: dict[int, Coeff] = {}
        if terms:
            for i, c in terms.items():
                if i < 0:
                    raise ValueError(f"negative exponent {i}")
                if c:
                    clean[int(i)] = _norm(c)
        self._terms = clean

    @property
    def terms(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Coeff]]:
        for i in sorted(self._terms):
            yield i, self._terms[i]

    def coeff(self, i: int) -> Coeff:
        return self._terms.get(i, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def __add__(self, other: UniPoly) -> UniPoly:
        acc = dict(self._terms)
        for i, c in other._terms.items():
            acc[i] = acc.get(i, 0) + c
        return UniPoly(acc)

    def evaluate(self, t0) -> Coeff:
        t0 = Fraction(t0)
        return _norm(sum((c * t0**i for i, c in self._terms.items()), Fraction(0)))

    def derivative(self) -> UniPoly:
        return UniPoly({i - 1: i * c for i, c in self._terms.items() if i})

    def lift_diagonal(self, k: int) -> BiPoly:
        """D((xy)^k)."""
        if k < 1:
            raise ValueError(f"lift power must be >= 1, got {k}")
        return BiPoly._raw({(i * k, i * k): c for i, c in self._terms.items()})

    def split(self, variable: str) -> BiPoly:
        """Embed as a polynomial in x alone or y alone."""
        if variable == "x":
            return BiPoly._raw({(i, 0): c for i, c in self._terms.items()})
        if variable == "y":
            return BiPoly._raw({(0, i): c for i, c in self._terms.items()})
        raise ValueError(f"variable must be 'x' or 'y', got {variable!r}")

    def to_text(self, var: str = "t") -> str:
        return _join([(c, _var(var, i)) for i, c in self.items()])

    def to_latex(self, var: str = "t") -> str:
        return _join([(c, _var(var, i, True)) for i, c in self.items()], tex=True)

    def to_json_obj(self) -> dict:
        return {"terms": [{"i": i, "c": _json_coeff(c)} for i, c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _json_coeff(c: Coeff):
    return c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _parse_coeff(c) -> Coeff:
    return Fraction(c) if isinstance(c, str) else c


# Functional spellings of the operations above.

def add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def substitute_powers(p: BiPoly, a: int, b: int) -> BiPoly:
    return p.substitute_powers(a, b)


def lift_diagonal(d: UniPoly, k: int) -> BiPoly:
    return d.lift_diagonal(k)


def split_univariate(d: UniPoly, variable: str) -> BiPoly:
    return d.split(variable)


def evaluate(p: BiPoly, x0, y0) -> Coeff:
    return p.evaluate(x0, y0)


def canonical_m_form(p: BiPoly) -> BiPoly:
    return p.canonical()


ZERO = BiPoly()
ONE = BiPoly({(0, 0): 1})
