"""Exact arithmetic: polynomials in q, symmetric polynomials in k
variables with q-polynomial coefficients, and basis expansions.

Everything is exact. Integer coefficients are the norm; fractions enter
through power-sum expansions and the plethystic substitution and are
kept as exact rationals, never floats. Equality of symmetric functions
of degree d is certified by comparing polynomials in k >= d variables
(or a smaller k when the caller can justify it; see to_basis).
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import factorial

from . import compositions as comps
from .errors import (
    InexactDivision,
    InsufficientVariables,
    MismatchedVariableCount,
    NonIntegralCoefficient,
    NotSymmetric,
    ParseError,
    PreconditionViolated,
)

BASES = ("m", "s", "h", "e", "p")


def _norm_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    return int(c)


class QPoly:
    """Polynomial in q with exact integer or rational coefficients.

    Stored as a map from nonnegative exponent to nonzero coefficient.
    The degree of the zero polynomial is None.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data: dict[int, object] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, c in items:
                e = int(e)
                if e < 0:
                    raise ValueError(f"negative q-exponent {e}")
                data[e] = data.get(e, 0) + c
        self._coeffs = {e: _norm_coeff(c) for e, c in data.items() if c != 0}

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, e: int) -> "QPoly":
        return cls({e: 1})

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls({0: c})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        """Largest exponent with nonzero coefficient, or None for zero."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs.values())

    def coeff(self, e: int):
        return self._coeffs.get(e, 0)

    def pairs(self):
        """(exponent, coefficient) pairs, decreasing exponent."""
        return [(e, self._coeffs[e]) for e in sorted(self._coeffs, reverse=True)]

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPoly) else QPoly.constant(-other))

    def __rsub__(self, other):
        return QPoly.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out: dict[int, object] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = QPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, value):
        """Value of the polynomial at q = value (exact)."""
        return sum((c * value**e for e, c in self._coeffs.items()), 0)

    def divide(self, d: "QPoly"):
        """Exact quotient self / d, or None if a remainder is left."""
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = {e: Fraction(c) for e, c in self._coeffs.items()}
        quot: dict[int, Fraction] = {}
        d_deg = d.degree
        d_lead = Fraction(d.coeff(d_deg))
        while rem:
            r_deg = max(rem)
            if r_deg < d_deg:
                return None
            factor = rem[r_deg] / d_lead
            quot[r_deg - d_deg] = factor
            for e, c in d._coeffs.items():
                shifted = e + r_deg - d_deg
                new = rem.get(shifted, Fraction(0)) - factor * c
                if new:
                    rem[shifted] = new
                else:
                    rem.pop(shifted, None)
        return QPoly(quot)

    def __str__(self):
        if not self._coeffs:
            return "0"
        chunks = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if isinstance(c, Fraction):
                body = f"({c})" if e > 0 else str(c)
            else:
                body = "" if (c == 1 and e > 0) else str(c)
            if e == 0:
                term = body
            elif e == 1:
                term = f"{body}q"
            else:
                term = f"{body}q^{e}"
            chunks.append((sign, term))
        first_sign, first_term = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in chunks[1:]:
            text += sign + term
        return text

    __repr__ = __str__

    _TERM_RE = re.compile(
        r"^(?:\((\d+)/(\d+)\)|(\d+)/(\d+)|(\d+))?(q(?:\^(\d+))?)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of str(): parse literals like "3q^6+q^5" or "-(1/2)q+1"."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty q-polynomial literal")
        if s == "0":
            return cls.zero()
        # split into signed terms
        terms = []
        i = 0
        sign = 1
        if s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            i = 1
        start = i
        while i <= len(s):
            if i == len(s) or s[i] in "+-":
                terms.append((sign, s[start:i]))
                if i < len(s):
                    sign = -1 if s[i] == "-" else 1
                start = i + 1
            i += 1
        coeffs: dict[int, object] = {}
        for sgn, body in terms:
            m = cls._TERM_RE.match(body)
            if not m or not body:
                raise ParseError(f"bad q-polynomial term {body!r} in {text!r}")
            pnum, pden, num, den, whole, qpart, qexp = m.groups()
            if pnum is not None:
                c = Fraction(int(pnum), int(pden))
            elif num is not None:
                c = Fraction(int(num), int(den))
            elif whole is not None:
                c = Fraction(int(whole))
            elif qpart:
                c = Fraction(1)
            else:
                raise ParseError(f"bad q-polynomial term {body!r} in {text!r}")
            if qpart:
                e = int(qexp) if qexp is not None else 1
            else:
                e = 0
            coeffs[e] = coeffs.get(e, 0) + sgn * c
        return cls(coeffs)


def _orbit_size(exps: tuple[int, ...]) -> int:
    mults: dict[int, int] = {}
    for e in exps:
        mults[e] = mults.get(e, 0) + 1
    size = factorial(len(exps))
    for m in mults.values():
        size //= factorial(m)
    return size


class SymFunc:
    """Homogeneous polynomial in x_1..x_k with QPoly coefficients.

    Terms map exponent vectors (length-k tuples) to nonzero QPoly
    coefficients. Symmetry is a testable property, not an enforced
    invariant, so intermediate sums may be asymmetric.
    """

    __slots__ = ("k", "degree", "_terms")

    def __init__(self, k: int, degree: int, terms=None):
        if k < 1:
            raise ValueError("need at least one variable")
        self.k = int(k)
        self.degree = int(degree)
        data: dict[tuple[int, ...], QPoly] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.k:
                    raise ValueError(f"exponent vector {exps} is not length {k}")
                if sum(exps) != self.degree:
                    raise ValueError(
                        f"exponent vector {exps} breaks homogeneity of degree {degree}"
                    )
                if not isinstance(c, QPoly):
                    c = QPoly.constant(c)
                prev = data.get(exps)
                c = c if prev is None else prev + c
                if c.is_zero:
                    data.pop(exps, None)
                else:
                    data[exps] = c
        self._terms = {e: c for e, c in data.items() if not c.is_zero}

    @classmethod
    def zero(cls, k: int, degree: int) -> "SymFunc":
        return cls(k, degree, None)

    @classmethod
    def one(cls, k: int) -> "SymFunc":
        return cls(k, 0, {(0,) * k: QPoly.one()})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exps) -> QPoly:
        return self._terms.get(tuple(exps), QPoly.zero())

    def terms(self):
        """(exponent vector, QPoly) pairs in decreasing lexicographic order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, reverse=True)]

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.k != other.k:
            return False
        if self.is_zero and other.is_zero:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, self.degree if self._terms else 0,
                     frozenset(self._terms.items())))

    def _check_k(self, other: "SymFunc"):
        if self.k != other.k:
            raise MismatchedVariableCount(
                f"cannot combine polynomials in {self.k} and {other.k} variables"
            )

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_k(other)
        if self.is_zero:
            return SymFunc(other.k, other.degree, other._terms)
        if other.is_zero:
            return SymFunc(self.k, self.degree, self._terms)
        if self.degree != other.degree:
            raise ValueError("cannot add polynomials of different degrees")
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, QPoly.zero()) + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        return SymFunc(self.k, self.degree, out)

    def __sub__(self, other):
        return self + (other * QPoly.constant(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if isinstance(other, QPoly):
            if other.is_zero:
                return SymFunc.zero(self.k, self.degree)
            return SymFunc(
                self.k, self.degree,
                {e: c * other for e, c in self._terms.items()},
            )
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_k(other)
        out: dict[tuple[int, ...], QPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                prev = out.get(e)
                s = prod if prev is None else prev + prod
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SymFunc(self.k, self.degree + other.degree, out)

    __rmul__ = __mul__

    def is_symmetric(self) -> bool:
        """True iff coefficients are constant on sorting orbits and no
        orbit is partially present."""
        orbits: dict[tuple[int, ...], list] = {}
        for e, c in self._terms.items():
            orbits.setdefault(tuple(sorted(e, reverse=True)), []).append(c)
        for rep, cs in orbits.items():
            if len(cs) != _orbit_size(rep):
                return False
            first = cs[0]
            if any(c != first for c in cs[1:]):
                return False
        return True

    def assert_symmetric(self):
        if not self.is_symmetric():
            raise NotSymmetric("polynomial is not symmetric in its variables")

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for e, c in self.terms():
            mono = "".join(
                f"x{i+1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e) if p
            ) or "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)

    __repr__ = __str__


def partitions_of(n: int, max_part=None, max_len=None):
    """Partitions of n in decreasing lexicographic order, as tuples."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(
            n - first, max_part=first,
            max_len=None if max_len is None else max_len - 1,
        ):
            yield (first,) + rest


def _check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(p) for p in lam)
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {lam}")
    return lam


def _weakly_increasing_rows(length: int, k: int, lower):
    """Weakly increasing tuples (v_1..v_len), lower[j] <= v_j <= k."""
    if length == 0:
        yield ()
        return
    out = [0] * length

    def rec(j: int, prev: int):
        lo = max(prev, lower[j])
        for v in range(lo, k + 1):
            out[j] = v
            if j + 1 == length:
                yield tuple(out)
            else:
                yield from rec(j + 1, v)

    yield from rec(0, 1)


def _ssyt_monomials(lam: tuple[int, ...], k: int):
    """Yield the content count-vector of every SSYT of shape lam with
    entries at most k."""
    rows = len(lam)

    def rec(r: int, prev_row, counts):
        if r == rows:
            yield tuple(counts)
            return
        length = lam[r]
        lower = [prev_row[j] + 1 if j < len(prev_row) else 1 for j in range(length)]
        for row in _weakly_increasing_rows(length, k, lower):
            for v in row:
                counts[v - 1] += 1
            yield from rec(r + 1, row, counts)
            for v in row:
                counts[v - 1] -= 1

    yield from rec(0, (), [0] * k)


def _distinct_permutations(items: tuple[int, ...]):
    """All distinct rearrangements, without generating duplicates."""
    pool: dict[int, int] = {}
    for it in items:
        pool[it] = pool.get(it, 0) + 1
    n = len(items)
    out = [0] * n

    def rec(pos: int):
        if pos == n:
            yield tuple(out)
            return
        for v in sorted(pool):
            if pool[v]:
                pool[v] -= 1
                out[pos] = v
                yield from rec(pos + 1)
                pool[v] += 1

    yield from rec(0)


def _one_part(basis: str, r: int, k: int) -> SymFunc:
    terms: dict[tuple[int, ...], int] = {}
    if basis == "h":
        for counts in _ssyt_monomials((r,), k):
            terms[counts] = terms.get(counts, 0) + 1
    elif basis == "e":
        if r > k:
            return SymFunc.zero(k, r)
        for pos in combinations(range(k), r):
            e = [0] * k
            for p in pos:
                e[p] = 1
            terms[tuple(e)] = 1
    elif basis == "p":
        for i in range(k):
            e = [0] * k
            e[i] = r
            terms[tuple(e)] = 1
    else:
        raise ValueError(f"not a one-part basis: {basis}")
    return SymFunc(k, r, terms)


def eval_basis(basis: str, lam, k: int) -> SymFunc:
    """The basis element named by partition lam, as an explicit
    polynomial in k variables.

    Schur elements come from the SSYT generating function; h, e, p are
    products of their one-part generators; m is the monomial orbit sum.
    A Schur or monomial element needing more than k rows evaluates to
    the zero polynomial rather than raising.
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if k < 1:
        raise ValueError("need at least one variable")
    lam = _check_partition(lam)
    degree = sum(lam)
    if basis == "s":
        if len(lam) > k:
            return SymFunc.zero(k, degree)
        terms: dict[tuple[int, ...], int] = {}
        for counts in _ssyt_monomials(lam, k):
            terms[counts] = terms.get(counts, 0) + 1
        return SymFunc(k, degree, terms)
    if basis == "m":
        if len(lam) > k:
            return SymFunc.zero(k, degree)
        padded = lam + (0,) * (k - len(lam))
        return SymFunc(k, degree, {e: 1 for e in _distinct_permutations(padded)})
    out = SymFunc.one(k)
    for part in lam:
        out = out * _one_part(basis, part, k)
    return out


class BasisExpansion:
    """Coefficients of a symmetric polynomial against a named basis."""

    __slots__ = ("basis", "degree", "_coeffs")

    def __init__(self, basis: str, degree: int, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = int(degree)
        data: dict[tuple[int, ...], QPoly] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for lam, c in items:
                lam = _check_partition(lam)
                if sum(lam) != self.degree:
                    raise ValueError(f"partition {lam} does not sum to {degree}")
                if not isinstance(c, QPoly):
                    c = QPoly.constant(c)
                prev = data.get(lam)
                c = c if prev is None else prev + c
                if c.is_zero:
                    data.pop(lam, None)
                else:
                    data[lam] = c
        self._coeffs = data

    def coeff(self, lam) -> QPoly:
        return self._coeffs.get(tuple(lam), QPoly.zero())

    def items(self):
        """(partition, QPoly) pairs in decreasing lexicographic order."""
        return [(lam, self._coeffs[lam]) for lam in sorted(self._coeffs, reverse=True)]

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return (
            self.basis == other.basis
            and (self.is_zero and other.is_zero or self.degree == other.degree)
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self._coeffs.items())))

    def evaluate(self, k: int) -> SymFunc:
        """Expand back into an explicit polynomial in k variables."""
        out = SymFunc.zero(k, self.degree)
        for lam, c in self._coeffs.items():
            out = out + eval_basis(self.basis, lam, k) * c
        return out

    def __str__(self):
        if not self._coeffs:
            return "0"
        bits = []
        for lam, c in self.items():
            name = f"{self.basis}{''.join(str(p) for p in lam) if lam else '()'}"
            bits.append(f"({c})*{name}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        """Canonical JSON form: partitions in decreasing lexicographic
        order, q-pairs [exponent, coefficient] in decreasing exponent
        order, rational coefficients rendered as "a/b" strings."""
        coeffs = []
        for lam, c in self.items():
            pairs = [
                [e, cf if isinstance(cf, int) else str(cf)]
                for e, cf in c.pairs()
            ]
            coeffs.append({"partition": list(lam), "q": pairs})
        return {"basis": self.basis, "degree": self.degree, "coeffs": coeffs}

    @classmethod
    def from_json_dict(cls, obj) -> "BasisExpansion":
        try:
            basis = obj["basis"]
            degree = obj["degree"]
            coeffs = {}
            for entry in obj["coeffs"]:
                lam = tuple(entry["partition"])
                pairs = []
                for e, cf in entry["q"]:
                    if isinstance(cf, str):
                        cf = Fraction(cf)
                    pairs.append((e, cf))
                coeffs[lam] = QPoly(pairs)
            return cls(basis, degree, coeffs)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad basis expansion JSON: {exc}") from None


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two symmetric polynomials in the same variables."""
    return f * g


def _pad(lam: tuple[int, ...], k: int) -> tuple[int, ...]:
    return lam + (0,) * (k - len(lam))


def _to_basis_triangular(f: SymFunc, basis: str) -> BasisExpansion:
    # Schur and monomial bases are unitriangular against monomials in
    # decreasing lexicographic order, so plain residual elimination works
    # and integer inputs stay integer.
    residual = f
    coeffs: dict[tuple[int, ...], QPoly] = {}
    for lam in partitions_of(f.degree, max_len=f.k):
        c = residual.coeff(_pad(lam, f.k))
        if c.is_zero:
            continue
        coeffs[lam] = c
        residual = residual - eval_basis(basis, lam, f.k) * c
    if not residual.is_zero:
        raise NotSymmetric("residual left after eliminating all basis elements")
    for lam, c in coeffs.items():
        if not c.is_integral:
            raise NonIntegralCoefficient(lam, c)
    return BasisExpansion(basis, f.degree, coeffs)


def _to_basis_elimination(f: SymFunc, basis: str) -> BasisExpansion:
    # h/e/p need k >= degree so that all partitions of the degree remain
    # visible as monomial orbits; then an exact rational solve recovers
    # the coefficients.
    if f.k < f.degree:
        raise InsufficientVariables(
            f"{basis}-expansion of degree {f.degree} needs at least "
            f"{f.degree} variables, got {f.k}"
        )
    parts = list(partitions_of(f.degree))
    k = f.k

    def m_coords(g: SymFunc) -> list[QPoly]:
        return [g.coeff(_pad(mu, k)) for mu in parts]

    n = len(parts)
    cols = [m_coords(eval_basis(basis, lam, k)) for lam in parts]
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = cols[j][i]
            val = entry.coeff(0)
            if entry.degree not in (None, 0):
                raise AssertionError("basis element with non-constant coefficient")
            row.append(Fraction(val))
        matrix.append(row)
    rhs = m_coords(f)

    # exact Gaussian elimination, Fraction pivots, QPoly right-hand side
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if matrix[r][col] != 0), None
        )
        if pivot is None:
            raise AssertionError("singular basis matrix")
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / matrix[col][col]
        matrix[col] = [v * inv for v in matrix[col]]
        rhs[col] = rhs[col] * inv
        for r in range(n):
            if r != col and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [
                    a - factor * b for a, b in zip(matrix[r], matrix[col])
                ]
                rhs[r] = rhs[r] - rhs[col] * factor
    coeffs = {parts[i]: rhs[i] for i in range(n) if not rhs[i].is_zero}
    return BasisExpansion(basis, f.degree, coeffs)


def to_basis(f: SymFunc, basis: str) -> BasisExpansion:
    """Expand a symmetric homogeneous polynomial in the named basis.

    Raises NotSymmetric if f fails the symmetry check,
    InsufficientVariables when basis is h, e or p and k < degree, and
    NonIntegralCoefficient when the s or m expansion (which is always
    integral for integral inputs) comes out fractional.
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    f.assert_symmetric()
    if f.is_zero:
        return BasisExpansion(basis, f.degree, None)
    if basis in ("s", "m"):
        return _to_basis_triangular(f, basis)
    return _to_basis_elimination(f, basis)


def ribbon(alpha, k: int) -> SymFunc:
    """Ribbon Schur polynomial of the composition alpha in k variables,
    via the signed sum of complete homogeneous elements over the
    coarsening multiset of alpha."""
    alpha = comps.as_composition(alpha)
    if k < sum(alpha):
        raise InsufficientVariables(
            f"ribbon of size {sum(alpha)} needs at least {sum(alpha)} variables"
        )
    out = SymFunc.zero(k, sum(alpha))
    sign_base = len(alpha)
    for lam, mult in comps.coarsening_multiset(alpha).items():
        sign = -1 if (sign_base - len(lam)) % 2 else 1
        out = out + eval_basis("h", lam, k) * (sign * mult)
    return out


def plethystic_q_substitute(exp: BasisExpansion) -> BasisExpansion:
    """On the power-sum basis, substitute x -> x(q-1): the coefficient
    of p_lam picks up a factor prod_i (q^{lam_i} - 1)."""
    if exp.basis != "p":
        raise PreconditionViolated("plethystic substitution needs a p-expansion")
    coeffs = {}
    for lam, c in exp.items():
        factor = QPoly.one()
        for part in lam:
            factor = factor * (QPoly.q_power(part) - QPoly.one())
        coeffs[lam] = c * factor
    return BasisExpansion("p", exp.degree, coeffs)


def divide_qpoly(exp: BasisExpansion, d: QPoly) -> BasisExpansion:
    """Coefficientwise exact division of a basis expansion by d."""
    coeffs = {}
    for lam, c in exp.items():
        quot = c.divide(d)
        if quot is None:
            raise InexactDivision(lam)
        coeffs[lam] = quot
    return BasisExpansion(exp.basis, exp.degree, coeffs)
