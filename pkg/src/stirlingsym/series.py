"""Truncated power series over an abstract commutative coefficient ring.

A :class:`TruncatedSeries` stores coefficients a_0..a_N of sum a_n y^n.  The
flavor tag distinguishes ordinary from exponential generating functions, but
coefficients are always stored plain: for an EGF the semantic coefficient of
y^n/n! is n! * a_n, and the factorial bookkeeping happens only at the
presentation boundary (:meth:`TruncatedSeries.egf_coefficient` and the
``from_egf_coefficients`` constructor).  With that convention multiplication
and composition are the same Cauchy/substitution formulas for both flavors.

The coefficient ring is described by a small adapter object providing exact
zero, one, rational embedding and unit inversion; ring elements themselves
are expected to support ``+``, ``-`` and ``*``.  Adapters for Q, Q[t] and the
ring of symmetric functions are provided.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import parse_rational, rational_str
from .symfunc import DEFAULT_DEGREE_CAP, SymFunc, TPoly, convert

FLAVORS = ("ogf", "egf")


class RationalRing:
    """Adapter for Q with elements fractions.Fraction."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_rational(self, q):
        return Fraction(q)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        return a != 0

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return Fraction(1) / a

    def eq(self, a, b) -> bool:
        return a == b

    def to_json(self, a):
        return rational_str(a)

    def from_json(self, data):
        return parse_rational(data)


class TPolyRing:
    """Adapter for Q[t]; units are the nonzero constants."""

    name = "Q[t]"

    def zero(self):
        return TPoly()

    def one(self):
        return TPoly.const(1)

    def from_rational(self, q):
        return TPoly.const(q)

    def is_zero(self, a) -> bool:
        return not a

    def is_unit(self, a) -> bool:
        return set(a.coeffs) == {0}

    def invert(self, a):
        if not self.is_unit(a):
            raise ValueError(f"{a} is not a unit in Q[t]")
        return TPoly.const(Fraction(1) / a.coeffs[0])

    def eq(self, a, b) -> bool:
        return a == b

    def to_json(self, a):
        return a.to_json()

    def from_json(self, data):
        return TPoly.from_json(data)


class SymFuncRing:
    """Adapter for the ring of symmetric functions over Q.

    Units are the nonzero rational constants.  ``basis`` fixes the preferred
    basis tag for zero/one and embedded rationals; ``cap`` bounds the degree
    of any product formed through this adapter.
    """

    def __init__(self, basis: str = "h", cap: int = DEFAULT_DEGREE_CAP):
        self.basis = basis
        self.cap = cap
        self.name = f"Lambda[{basis}]"

    def zero(self):
        return SymFunc.zero(self.basis)

    def one(self):
        return SymFunc.one(self.basis)

    def from_rational(self, q):
        return SymFunc(self.basis, {(): Fraction(q)})

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def is_unit(self, a) -> bool:
        return set(a.terms) == {()}

    def invert(self, a):
        if not self.is_unit(a):
            raise ValueError("only nonzero constants are units in Lambda")
        return self.from_rational(Fraction(1) / a.constant_term())

    def eq(self, a, b) -> bool:
        return a == b

    def to_json(self, a):
        return a.to_json()

    def from_json(self, data):
        return SymFunc.from_json(data)


QQ = RationalRing()
QT = TPolyRing()


class TruncatedSeries:
    """Degree-capped power series with coefficients in an abstract ring."""

    __slots__ = ("ring", "flavor", "order", "coeffs")

    def __init__(self, ring, flavor: str, order: int, coeffs):
        if flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.flavor = flavor
        self.order = order
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_coefficients(cls, ring, flavor, order, coeffs) -> "TruncatedSeries":
        """Build from plain y^n coefficients (padded with zeros up to order)."""
        coeffs = list(coeffs)[: order + 1]
        coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        return cls(ring, flavor, order, coeffs)

    @classmethod
    def from_egf_coefficients(cls, ring, order, coeffs) -> "TruncatedSeries":
        """Build an EGF from semantic coefficients c_n of y^n/n!."""
        plain = [
            c * Fraction(1, factorial(n))
            for n, c in enumerate(list(coeffs)[: order + 1])
        ]
        return cls.from_coefficients(ring, "egf", order, plain)

    @classmethod
    def from_function(cls, ring, flavor, order, fn) -> "TruncatedSeries":
        """Coefficients from fn(n); semantic (of y^n/n!) when flavor is egf."""
        values = [fn(n) for n in range(order + 1)]
        if flavor == "egf":
            return cls.from_egf_coefficients(ring, order, values)
        return cls(ring, flavor, order, values)

    @classmethod
    def one(cls, ring, flavor, order) -> "TruncatedSeries":
        return cls.from_coefficients(ring, flavor, order, [ring.one()])

    @classmethod
    def identity(cls, ring, flavor, order) -> "TruncatedSeries":
        """The series y."""
        return cls.from_coefficients(ring, flavor, order, [ring.zero(), ring.one()])

    # -- access ---------------------------------------------------------------

    def coefficient(self, n: int):
        """Plain coefficient of y^n."""
        return self.coeffs[n]

    def egf_coefficient(self, n: int):
        """Semantic coefficient of y^n/n!; only meaningful for EGF flavor."""
        if self.flavor != "egf":
            raise ValueError("egf_coefficient is only defined for EGF series")
        return self.coeffs[n] * Fraction(factorial(n))

    def _compatible(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if self.flavor != other.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} vs {other.flavor}")
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._compatible(other)
        return all(self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({self.ring.name}, {self.flavor}, N={self.order})"

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compatible(other)
        return TruncatedSeries(
            self.ring,
            self.flavor,
            self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compatible(other)
        return TruncatedSeries(
            self.ring,
            self.flavor,
            self.order,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(
            self.ring, self.flavor, self.order, [c * a for a in self.coeffs]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.mul(other)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the common order."""
        self._compatible(other)
        zero = self.ring.zero()
        out = [zero for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not self.ring.is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.ring, self.flavor, self.order, out)

    def inv(self) -> "TruncatedSeries":
        """Multiplicative inverse via the triangular Cauchy recurrence."""
        a0 = self.coeffs[0]
        if not self.ring.is_unit(a0):
            raise ValueError("constant term is not a unit; no multiplicative inverse")
        inv0 = self.ring.invert(a0)
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.ring, self.flavor, self.order, out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitution self(inner(y)), truncated; inner must kill constants."""
        self._compatible(inner)
        if not self.ring.is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        result = TruncatedSeries.from_coefficients(
            self.ring, self.flavor, self.order, [self.coeffs[0]]
        )
        power = TruncatedSeries.one(self.ring, self.flavor, self.order)
        for k in range(1, self.order + 1):
            power = power.mul(inner)
            result = result + power.scale(self.coeffs[k])
        return result

    def comp_inverse(self) -> "TruncatedSeries":
        """Compositional inverse, solved degree by degree.

        Requires a zero constant term and a unit linear coefficient.  The
        direct triangular solve is preferred over Newton iteration: orders are
        tiny and the ring is exact.
        """
        if not self.ring.is_zero(self.coeffs[0]):
            raise ValueError("compositional inverse needs zero constant term")
        if not self.ring.is_unit(self.coeffs[1]):
            raise ValueError("compositional inverse needs a unit linear term")
        inv1 = self.ring.invert(self.coeffs[1])
        g = [self.ring.zero(), inv1] + [self.ring.zero()] * (self.order - 1)
        for n in range(2, self.order + 1):
            candidate = TruncatedSeries(self.ring, self.flavor, self.order, g)
            residue = self.compose(candidate).coeffs[n]
            # only the linear term of self contributes g_n at order n
            g[n] = -(inv1 * residue)
        return TruncatedSeries(self.ring, self.flavor, self.order, g)

    # -- serialization ------------------------------------------------------------

    def to_json(self):
        return {
            "flavor": self.flavor,
            "order": self.order,
            "coeffs": [self.ring.to_json(a) for a in self.coeffs],
        }

    @classmethod
    def from_json(cls, ring, data) -> "TruncatedSeries":
        return cls(
            ring,
            data["flavor"],
            data["order"],
            [ring.from_json(x) for x in data["coeffs"]],
        )


def symfunc_egf(order: int, fn, basis: str = "h") -> TruncatedSeries:
    """EGF over the symmetric-function ring with semantic coefficients fn(n)."""
    ring = SymFuncRing(basis=basis)
    return TruncatedSeries.from_egf_coefficients(
        ring, order, [convert(fn(n), basis) for n in range(order + 1)]
    )
