"""Symmetric functions with exact rational coefficients.

A :class:`SymFunc` is a finite linear combination of basis elements indexed by
integer partitions, tagged with one of the five classical bases:

* ``m`` monomial, ``e`` elementary, ``h`` complete homogeneous, ``p`` power
  sum, ``s`` Schur.

Conversions among m, e, h and p go through explicit expansions in d variables
(d = the degree of the homogeneous component, which is faithful for that
degree): expand the basis element as a polynomial and read the monomial
coefficients at partition exponents.  The Schur basis is handled through
symmetric-group characters (Murnaghan-Nakayama recursion) pivoting on the
power-sum basis, so everything stays in exact integer/rational arithmetic.

Elements are immutable after construction and all operations are pure, so
values can be shared freely across threads.  The per-degree transition
matrices are computed once and kept in a lock-protected cache.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    partitions_of,
    rational_str,
    parse_rational,
    z_of,
)

BASES = ("m", "e", "h", "p", "s")

#: Largest homogeneous degree the package will convert or multiply by default.
#: Operations that would exceed the cap raise DegreeCapError instead of
#: silently truncating.
DEFAULT_DEGREE_CAP = 8


class DegreeCapError(ValueError):
    """Raised when an operation would exceed the configured degree cap."""


def _check_cap(degree: int, cap: int) -> None:
    if degree > cap:
        raise DegreeCapError(
            f"degree {degree} exceeds the cap {cap}; pass a larger cap explicitly"
        )


# ---------------------------------------------------------------------------
# polynomials in d variables, used to build transition matrices
# ---------------------------------------------------------------------------


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def _generator_poly(basis: str, k: int, d: int) -> dict:
    """e_k, h_k or p_k expanded in exactly d variables."""
    if basis == "e":
        idxsets = combinations(range(d), k)
    elif basis == "h":
        idxsets = combinations_with_replacement(range(d), k)
    elif basis == "p":
        idxsets = ((i,) * k for i in range(d))
    else:
        raise ValueError(f"no variable expansion for basis {basis!r}")
    out: dict = {}
    for idx in idxsets:
        expo = [0] * d
        for i in idx:
            expo[i] += 1
        out[tuple(expo)] = out.get(tuple(expo), 0) + 1
    return out


_matrix_lock = threading.Lock()
_matrix_cache: dict = {}


def _to_m_matrix(basis: str, d: int) -> dict:
    """C[lam][mu] = coefficient of m_mu in basis_lam, for lam, mu |- d."""
    key = ("to_m", basis, d)
    with _matrix_lock:
        if key in _matrix_cache:
            return _matrix_cache[key]
    parts = partitions_of(d)
    if d == 0:
        matrix = {(): {(): Fraction(1)}}
    else:
        gens = {k: _generator_poly(basis, k, d) for k in range(1, d + 1)}
        matrix = {}
        for lam in parts:
            poly = {(0,) * d: 1}
            for part in lam:
                poly = _poly_mul(poly, gens[part])
            row = {}
            for mu in parts:
                expo = mu + (0,) * (d - len(mu))
                c = poly.get(expo, 0)
                if c:
                    row[mu] = Fraction(c)
            matrix[lam] = row
    with _matrix_lock:
        _matrix_cache.setdefault(key, matrix)
        return _matrix_cache[key]


def _from_m_matrix(basis: str, d: int) -> dict:
    """D[mu][lam] with m_mu = sum_lam D[mu][lam] basis_lam (inverse of C)."""
    key = ("from_m", basis, d)
    with _matrix_lock:
        if key in _matrix_cache:
            return _matrix_cache[key]
    parts = partitions_of(d)
    c = _to_m_matrix(basis, d)
    size = len(parts)
    # Gauss-Jordan inversion of C over the rationals.
    aug = [
        [c[parts[i]].get(parts[j], Fraction(0)) for j in range(size)]
        + [Fraction(int(i == j)) for j in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inverse = {
        parts[i]: {
            parts[j]: aug[i][size + j]
            for j in range(size)
            if aug[i][size + j] != 0
        }
        for i in range(size)
    }
    with _matrix_lock:
        _matrix_cache.setdefault(key, inverse)
        return _matrix_cache[key]


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _character_beta(beta: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        if b >= k and (b - k) not in bset:
            height = sum(1 for x in beta if b - k < x < b)
            newbeta = tuple(sorted(bset - {b} | {b - k}, reverse=True))
            total += (-1) ** height * _character_beta(newbeta, rest)
    return total


def character(lam, mu) -> int:
    """Irreducible symmetric-group character value chi^lam(mu)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    length = len(lam)
    beta = tuple(lam[i] + (length - 1 - i) for i in range(length))
    return _character_beta(beta, mu)


# ---------------------------------------------------------------------------
# univariate polynomials over Q (the target of the e_i -> t specialization)
# ---------------------------------------------------------------------------


class TPoly:
    """Polynomial in one variable t with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for expo, c in dict(coeffs).items():
                c = Fraction(c)
                if c:
                    data[int(expo)] = c
        self.coeffs = data

    @classmethod
    def const(cls, c) -> "TPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def t(cls, power: int = 1) -> "TPoly":
        return cls({power: Fraction(1)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return TPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                out[ea + eb] = out.get(ea + eb, Fraction(0)) + ca * cb
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = rational_str(c)
            else:
                var = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = f"-{var}"
                else:
                    body = f"{rational_str(c)}*{var}"
            pieces.append(body)
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        return [[e, rational_str(c)] for e, c in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, data) -> "TPoly":
        return cls({int(e): parse_rational(c) for e, c in data})


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------


def _term_order_key(lam: Partition):
    # degree first, then reverse-lexicographic within a degree
    return (sum(lam), tuple(-p for p in lam))


class SymFunc:
    """Basis-tagged finite linear combination of partition-indexed terms.

    ``terms`` maps partitions to nonzero Fractions.  Equality is mathematical
    (independent of the basis tag).  Mixed-degree elements are allowed.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        data: dict[Partition, Fraction] = {}
        if terms:
            for lam, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    data[check_partition(lam)] = c
        self.terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "e") -> "SymFunc":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: str = "e") -> "SymFunc":
        return cls(basis, {(): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc(
            self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == d}
        )

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(check_partition(lam), Fraction(0))

    def constant_term(self) -> Fraction:
        # the empty partition indexes the constant in every basis
        return self.terms.get((), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        if not c:
            return SymFunc(self.basis, {})
        return SymFunc(self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc(self.basis, {(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return convert(self, "m").terms == convert(other, "m").terms

    __hash__ = None

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _term_order_key(kv[0]))

    def __str__(self):
        return render_symfunc(self)

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {render_symfunc(self)!r})"

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": rational_str(c)}
                for lam, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        return cls(
            data["basis"],
            {
                tuple(t["partition"]): parse_rational(t["coeff"])
                for t in data["terms"]
            },
        )


def basis_element(basis: str, lam) -> SymFunc:
    """The single basis element with coefficient 1."""
    return SymFunc(basis, {check_partition(lam): Fraction(1)})


def render_symfunc(f: SymFunc, latex: bool = False) -> str:
    """Render like ``2*m(2) + 5*m(1,1)`` (or ``2m_{(2)} + ...`` with latex)."""
    if not f.terms:
        return "0"
    pieces = []
    for lam, c in f.sorted_terms():
        if not lam:
            pieces.append(rational_str(c))
            continue
        body = ",".join(str(p) for p in lam)
        sym = f"{f.basis}_{{({body})}}" if latex else f"{f.basis}({body})"
        if c == 1:
            pieces.append(sym)
        elif c == -1:
            pieces.append(f"-{sym}")
        elif latex:
            pieces.append(f"{rational_str(c)}{sym}")
        else:
            pieces.append(f"{rational_str(c)}*{sym}")
    return " + ".join(pieces).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# conversion
# ---------------------------------------------------------------------------


def _convert_homogeneous(terms: dict, source: str, target: str, d: int) -> dict:
    """Convert a degree-d homogeneous term dict between bases."""
    if source == target:
        return dict(terms)
    if source == "s" or target == "s":
        if source != "p" and target == "s":
            pterms = _convert_homogeneous(terms, source, "p", d)
            return _convert_homogeneous(pterms, "p", "s", d)
        if source == "s" and target != "p":
            pterms = _convert_homogeneous(terms, "s", "p", d)
            return _convert_homogeneous(pterms, "p", target, d)
        out: dict[Partition, Fraction] = {}
        if source == "s":  # s -> p: s_lam = sum_mu chi^lam(mu)/z_mu p_mu
            for lam, c in terms.items():
                for mu in partitions_of(d):
                    chi = character(lam, mu)
                    if chi:
                        out[mu] = out.get(mu, Fraction(0)) + c * Fraction(chi, z_of(mu))
        else:  # p -> s: p_mu = sum_lam chi^lam(mu) s_lam
            for mu, c in terms.items():
                for lam in partitions_of(d):
                    chi = character(lam, mu)
                    if chi:
                        out[lam] = out.get(lam, Fraction(0)) + c * chi
        return {lam: c for lam, c in out.items() if c}
    # pivot through the monomial basis
    if source != "m":
        matrix = _to_m_matrix(source, d)
        mterms: dict[Partition, Fraction] = {}
        for lam, c in terms.items():
            for mu, entry in matrix[lam].items():
                mterms[mu] = mterms.get(mu, Fraction(0)) + c * entry
        terms = {lam: c for lam, c in mterms.items() if c}
        if target == "m":
            return terms
    matrix = _from_m_matrix(target, d)
    out = {}
    for mu, c in terms.items():
        for lam, entry in matrix[mu].items():
            out[lam] = out.get(lam, Fraction(0)) + c * entry
    return {lam: c for lam, c in out.items() if c}


def convert(f: SymFunc, target: str, cap: int = DEFAULT_DEGREE_CAP) -> SymFunc:
    """Express the same element of the ring in the target basis, exactly."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return SymFunc(target, f.terms)
    _check_cap(f.degree(), cap)
    by_degree: dict[int, dict] = {}
    for lam, c in f.terms.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    out: dict[Partition, Fraction] = {}
    for d, terms in by_degree.items():
        for lam, c in _convert_homogeneous(terms, f.basis, target, d).items():
            out[lam] = out.get(lam, Fraction(0)) + c
    return SymFunc(target, out)


def multiply(f: SymFunc, g: SymFunc, cap: int = DEFAULT_DEGREE_CAP) -> SymFunc:
    """Product in the ring, returned in the basis of f."""
    if f.is_zero() or g.is_zero():
        return SymFunc(f.basis, {})
    _check_cap(f.degree() + g.degree(), cap)
    # multiplicative bases concatenate partitions; m and s pivot through one
    work = f.basis if f.basis in ("e", "h", "p") else ("p" if f.basis == "s" else "e")
    a = convert(f, work, cap)
    b = convert(g, work, cap)
    out: dict[Partition, Fraction] = {}
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            key = tuple(sorted(lam + mu, reverse=True))
            out[key] = out.get(key, Fraction(0)) + c * d
    return convert(SymFunc(work, out), f.basis, cap)


def omega(f: SymFunc, cap: int = DEFAULT_DEGREE_CAP) -> SymFunc:
    """The involution exchanging e_n and h_n.

    On the power-sum basis it scales p_lam by (-1)^(|lam|-l(lam)); on the
    Schur basis it conjugates partitions.
    """
    if f.basis == "e":
        return SymFunc("h", f.terms)
    if f.basis == "h":
        return SymFunc("e", f.terms)
    if f.basis == "p":
        return SymFunc(
            "p",
            {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in f.terms.items()},
        )
    if f.basis == "s":
        return SymFunc("s", {conjugate(lam): c for lam, c in f.terms.items()})
    return convert(omega(convert(f, "e", cap), cap), "m", cap)


def specialize_E(f: SymFunc, cap: int = DEFAULT_DEGREE_CAP) -> TPoly:
    """The algebra map sending every e_i (i >= 1) to t.

    Computed by converting to the elementary basis and mapping e_lam to
    t^(l(lam)).
    """
    e = convert(f, "e", cap)
    out: dict[int, Fraction] = {}
    for lam, c in e.terms.items():
        out[len(lam)] = out.get(len(lam), Fraction(0)) + c
    return TPoly(out)


def evaluate_h(f: SymFunc, values: dict, cap: int = DEFAULT_DEGREE_CAP) -> Fraction:
    """Substitute values[i] for the generator h_i, multiplicatively on h_lam."""
    h = convert(f, "h", cap)
    total = Fraction(0)
    for lam, c in h.terms.items():
        prod = Fraction(1)
        for part in lam:
            if part not in values:
                raise ValueError(f"no value provided for h_{part}")
            prod *= Fraction(values[part])
        total += c * prod
    return total
