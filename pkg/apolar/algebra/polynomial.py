import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.monomial import ONE, Monomial
from apolar.core.errors import GridMismatchError, RingMismatchError, UsageError

Scalar = Union[int, Fraction]

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<var>[adxy])_\{\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\}"
    r"|(?P<op>[-+*^]))"
)


class Polynomial:
    """Sparse polynomial with exact rational coefficients over one ring of a grid."""

    __slots__ = ("ring", "grid", "terms")

    def __init__(self, ring: Ring, grid: VariableGrid, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.ring = ring
        self.grid = grid
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff if isinstance(coeff, Fraction) else Fraction(coeff)

    @classmethod
    def zero(cls, ring: Ring, grid: VariableGrid) -> "Polynomial":
        return cls(ring, grid)

    @classmethod
    def constant(cls, ring: Ring, grid: VariableGrid, value: Scalar = 1) -> "Polynomial":
        return cls(ring, grid, {ONE: value})

    @classmethod
    def monomial(cls, ring: Ring, grid: VariableGrid, mono: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(ring, grid, {mono: coeff})

    @classmethod
    def cell(cls, ring: Ring, grid: VariableGrid, i: int, j: int) -> "Polynomial":
        """The entry in cell (i, j); canonicalized, so it may carry a sign or vanish."""
        entry = grid.canonical(i, j)
        if entry is None:
            return cls.zero(ring, grid)
        sign, var = entry
        return cls(ring, grid, {Monomial.variable(var): sign})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring.value}-side and {other.ring.value}-side polynomials")
        if self.grid != other.grid:
            raise GridMismatchError(f"grids differ: {self.grid!r} vs {other.grid!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return Polynomial(self.ring, self.grid, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, self.grid, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, factor: Scalar) -> "Polynomial":
        if not factor:
            return Polynomial.zero(self.ring, self.grid)
        return Polynomial(self.ring, self.grid, {m: c * factor for m, c in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff: Scalar = 1) -> "Polynomial":
        if not coeff:
            return Polynomial.zero(self.ring, self.grid)
        return Polynomial(self.ring, self.grid, {m * mono: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial(self.ring, self.grid, terms)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.ring, self.grid)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.grid == other.grid and self.terms == other.terms

    __hash__ = None

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(self.ring, self.grid, {m: c for m, c in self.terms.items() if m.degree == degree})

    def substitute_one(self, var: int) -> "Polynomial":
        """Set one variable to 1 (dehomogenization)."""
        terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            image = Monomial.from_dict({v: e for v, e in mono.exps if v != var})
            terms[image] = terms.get(image, 0) + coeff
        return Polynomial(self.ring, self.grid, terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms from the largest monomial down, degree first then diagonal lex."""
        return sorted(self.terms.items(), key=lambda item: item[0].desc_key)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for mono, coeff in self.sorted_terms():
            factors = [
                self.grid.symbol(v, self.ring) + (f"^{e}" if e > 1 else "")
                for v, e in mono.exps
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    @classmethod
    def from_text(cls, text: str, ring: Ring, grid: VariableGrid) -> "Polynomial":
        """Parse the canonical text format (sums of signed products, no brackets)."""
        tokens = _tokenize(text)
        letter = grid.letter(ring)
        result = cls.zero(ring, grid)
        pos = 0
        if not tokens:
            raise UsageError("empty polynomial text")
        while pos < len(tokens):
            if pos and tokens[pos] not in (("op", "+"), ("op", "-")):
                raise UsageError(f"expected '+' or '-' between terms, got {tokens[pos][1]!r}")
            sign = 1
            while pos < len(tokens) and tokens[pos][0] == "op" and tokens[pos][1] in "+-":
                if tokens[pos][1] == "-":
                    sign = -sign
                pos += 1
            term = cls.constant(ring, grid, sign)
            expect_factor = True
            while pos < len(tokens) and expect_factor:
                kind, value = tokens[pos]
                if kind == "number":
                    term = term.scale(_rational(value))
                    pos += 1
                elif kind == "var":
                    name, i, j = value
                    if name != letter:
                        raise UsageError(f"variable {name}_{{{i},{j}}} does not belong to the {ring.value}-side of {grid!r}")
                    factor = cls.cell(ring, grid, i, j)
                    pos += 1
                    if pos < len(tokens) and tokens[pos] == ("op", "^"):
                        if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "number":
                            raise UsageError("exponent expected after '^'")
                        exponent = tokens[pos + 1][1]
                        if not exponent.isdigit():
                            raise UsageError(f"exponent must be a nonnegative integer, got {exponent!r}")
                        factor = factor ** int(exponent)
                        pos += 2
                    term = term * factor
                else:
                    raise UsageError(f"unexpected '{value}' in polynomial text")
                if pos < len(tokens) and tokens[pos] == ("op", "*"):
                    pos += 1
                else:
                    expect_factor = False
            result = result + term
        return result

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.ring.value}, {self.grid!r}, {self.to_text()!r})"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {text!r}") from None


def _tokenize(text: str) -> List[Tuple[str, object]]:
    tokens: List[Tuple[str, object]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise UsageError(f"cannot parse polynomial text near {text[pos:pos + 12]!r}")
        if match.group("number") is not None:
            tokens.append(("number", match.group("number")))
        elif match.group("var") is not None:
            tokens.append(("var", (match.group("var"), int(match.group("i")), int(match.group("j")))))
        else:
            tokens.append(("op", match.group("op")))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def linear_combination(polys: Iterable[Polynomial], coefficients: Iterable[Scalar]) -> Polynomial:
    polys = list(polys)
    if not polys:
        raise UsageError("empty linear combination")
    total = Polynomial.zero(polys[0].ring, polys[0].grid)
    for poly, coeff in zip(polys, coefficients):
        total = total + poly.scale(coeff)
    return total
