"""Exact dense polynomial arithmetic over Z and over prime fields.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the coefficient tuple
(a_0, ..., a_n) with trailing zeros trimmed.  The zero polynomial is the
empty tuple and has no degree (``degree`` is None).  Over GF(p) every stored
coefficient lies in [0, p-1].  Ring and Poly values are immutable and every
operation is a pure function, so values are safe to share between threads.

The canonical JSON form keeps coefficients as decimal strings so that
arbitrary-precision integers survive any JSON reader:

    {"ring": "Z", "coeffs": ["2", "12", "2"]}
    {"ring": "Fp", "p": 5, "coeffs": ["2", "1"]}
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomics import is_prime
from .errors import DomainError


@dataclass(frozen=True)
class Ring:
    """Coefficient domain: the integers ("Z") or a prime field ("Fp")."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Z":
            if self.p is not None:
                raise DomainError("ring Z carries no modulus")
        elif self.kind == "Fp":
            if self.p is None or not is_prime(self.p):
                raise DomainError(f"field order must be prime, got {self.p!r}")
        else:
            raise DomainError(f"unknown ring kind {self.kind!r}")

    @property
    def is_field(self) -> bool:
        return self.kind == "Fp"

    def normalize(self, c: int) -> int:
        return c % self.p if self.kind == "Fp" else c

    def __str__(self):
        return "Z" if self.kind == "Z" else f"F{self.p}"

    def to_json_dict(self) -> dict:
        if self.kind == "Z":
            return {"ring": "Z"}
        return {"ring": "Fp", "p": self.p}

    @staticmethod
    def from_json_dict(d: dict) -> "Ring":
        kind = d.get("ring")
        if kind == "Z":
            return Z
        if kind == "Fp":
            return Ring("Fp", int(d["p"]))
        raise DomainError(f"unknown ring descriptor {d!r}")


Z = Ring("Z")


def GF(p: int) -> Ring:
    """The prime field with p elements."""
    return Ring("Fp", p)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with exact coefficients over a Ring."""

    ring: Ring
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [self.ring.normalize(int(v)) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # ------------------------------------------------------------- builders

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: Ring, c: int) -> "Poly":
        return cls(ring, (c,))

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, (1,))

    @classmethod
    def x(cls, ring: Ring) -> "Poly":
        return cls(ring, (0, 1))

    @classmethod
    def monomial(cls, ring: Ring, c: int, e: int) -> "Poly":
        """c * x**e."""
        if e < 0:
            raise DomainError("monomial exponent must be >= 0")
        return cls(ring, (0,) * e + (c,))

    # ------------------------------------------------------------ structure

    @property
    def degree(self) -> int | None:
        """Degree of the trimmed polynomial; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """Coefficient of x**i (0 beyond the stored degree)."""
        if i < 0:
            raise DomainError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_coefficient(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def _same_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise DomainError(f"ring mismatch: {self.ring} vs {other.ring}")

    # ----------------------------------------------------------- arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        self._same_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple(-v for v in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_ring(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.ring)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.ring, out)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise DomainError("negative polynomial power")
        result = Poly.one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "Poly":
        """Multiply every coefficient by the ring element c."""
        return Poly(self.ring, tuple(c * v for v in self.coeffs))

    def shift(self, e: int) -> "Poly":
        """Multiply by x**e."""
        if e < 0:
            raise DomainError("shift exponent must be >= 0")
        if not self.coeffs:
            return self
        return Poly(self.ring, (0,) * e + self.coeffs)

    def evaluate(self, v: int) -> int:
        """Horner evaluation at the ring element v."""
        v = self.ring.normalize(int(v))
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ring.normalize(acc * v + c)
        return acc

    def compose_linear(self, c0: int, c1: int) -> "Poly":
        """The exact expansion of self(c0 + c1*x)."""
        lin = Poly(self.ring, (c0, c1))
        out = Poly.zero(self.ring)
        for c in reversed(self.coeffs):
            out = out * lin + Poly.constant(self.ring, c)
        return out

    # ------------------------------------------------ reciprocal machinery

    def reciprocal(self) -> "Poly":
        """Coefficient reversal x^deg * self(1/x), at the trimmed degree."""
        if not self.coeffs:
            raise DomainError("reciprocal of the zero polynomial is undefined")
        return Poly(self.ring, self.coeffs[::-1])

    def is_self_reciprocal(self) -> bool:
        """True iff nonzero with a palindromic coefficient tuple.

        Nonzero constants are self-reciprocal; the zero polynomial is not.
        """
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    # --------------------------------------------------- field-only helpers

    def _require_field(self) -> int:
        if not self.ring.is_field:
            raise DomainError("operation requires a prime-field ring")
        return self.ring.p

    def monic(self) -> "Poly":
        """Scale a nonzero polynomial over GF(p) to leading coefficient 1."""
        p = self._require_field()
        if not self.coeffs:
            raise DomainError("the zero polynomial has no monic form")
        inv = pow(self.leading_coefficient, p - 2, p)
        return self.scale(inv)

    def __divmod__(self, other: "Poly"):
        self._same_ring(other)
        p = self._require_field()
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.ring), self
        quo = [0] * (dq + 1)
        inv = pow(other.leading_coefficient, p - 2, p)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * inv % p
            if c:
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return Poly(self.ring, quo), Poly(self.ring, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -------------------------------------------------------- serialization

    def to_json_dict(self) -> dict:
        d = self.ring.to_json_dict()
        d["coeffs"] = [str(c) for c in self.coeffs]
        return d

    @staticmethod
    def from_json_dict(d: dict) -> "Poly":
        ring = Ring.from_json_dict(d)
        return Poly(ring, tuple(int(s) for s in d.get("coeffs", ())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms)


def reduce_mod_p(a: Poly, p: int) -> Poly:
    """Coefficientwise reduction of an integer polynomial into GF(p)."""
    if a.ring != Z:
        raise DomainError("reduce_mod_p expects a polynomial over Z")
    return Poly(GF(p), a.coeffs)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over a prime field (0 for gcd(0, 0))."""
    a._same_ring(b)
    a._require_field()
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced mod a nonzero polynomial over a prime field."""
    if e < 0:
        raise DomainError("negative exponent")
    mod._require_field()
    result = Poly.one(base.ring) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result
