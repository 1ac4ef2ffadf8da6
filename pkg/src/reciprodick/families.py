"""Constructors for the reversed-Dickson-derived polynomial families.

Wire names (shared by the CLI, the JSON forms, and the classifiers):

  dickson   n-th reversed Dickson polynomial of the (k+1)-th kind,
            D_{n,k}(a, x) = sum_i (n-ki)/(n-i) * C(n-i, i) * (-x)^i * a^(n-2i)
            for n >= 1, with the constant 2-k at n = 0.
  f         k * sum_j C(n-1, 2j+1) * (x^j - x^(j+1)) + 2 * sum_j C(n, 2j) * x^j
            for n >= 1, with the constant 2-k at n = 0.  The composition
            f(1 - 4x) equals 2^n * D_{n,k}(1, x) coefficientwise over Z.
  g, h      even-n closed form of f with both end coefficients replaced by
            2-k (g) or by k(n-1)+2 (h); interior coefficients unchanged.
  gstar,    odd-n analogues with both ends -k(n-1)+2n (gstar) or k(n-1)+2
  hstar     (hstar).
  kind1     sum_j C(n, 2j) * x^j          (first-kind specialization)
  kind2/3   sum_j C(n, 2j+1) * x^j        (second- and third-kind; identical)
  fchar2    the GF(2) member: sum_j C(n-1, 2j+1) * (x^j - x^(j+1)) at k = 1.

Every family is constructed exactly over Z and then reduced coefficientwise
when the target ring is a prime field, so characteristic-p degree drops are
handled by the ordinary trimming rules of Poly.  Over GF(p) the kind
parameter k is restricted to [0, p-1].
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomics import binomial
from .errors import DomainError
from .ringpoly import GF, Poly, Ring, Z

FAMILIES = ("dickson", "f", "g", "h", "gstar", "hstar", "kind1", "kind2", "kind3", "fchar2")

_EVEN_ONLY = ("g", "h")
_ODD_ONLY = ("gstar", "hstar")
_KINDS = ("kind1", "kind2", "kind3")


def _check_k_range(ring: Ring, k: int) -> None:
    if ring.is_field and not 0 <= k <= ring.p - 1:
        raise DomainError(f"over {ring} the kind parameter k must lie in [0, {ring.p - 1}], got {k}")


@dataclass(frozen=True)
class FamilySpec:
    """A fully parametrized family member: which family, n, k, ring, and a."""

    family: str
    n: int
    k: int = 0
    ring: Ring = Z
    a: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise DomainError("family index n must be >= 0")
        if self.family in _EVEN_ONLY and (self.n <= 1 or self.n % 2):
            raise DomainError(f"family {self.family!r} requires even n > 1")
        if self.family in _ODD_ONLY and (self.n <= 1 or self.n % 2 == 0):
            raise DomainError(f"family {self.family!r} requires odd n > 1")
        if self.family in _KINDS and self.k != 0:
            raise DomainError(f"family {self.family!r} takes no kind parameter k")
        if self.family == "fchar2":
            if self.ring != GF(2):
                raise DomainError("family 'fchar2' lives over F2")
            if self.k != 1:
                raise DomainError("family 'fchar2' fixes k = 1")
            if self.n < 1:
                raise DomainError("family 'fchar2' requires n >= 1")
        elif self.family not in _KINDS:
            _check_k_range(self.ring, self.k)

    def to_json_dict(self) -> dict:
        d = {"family": self.family, "n": self.n, "k": self.k, "ring": self.ring.to_json_dict()}
        if self.family == "dickson":
            d["a"] = self.a
        return d

    @staticmethod
    def from_json_dict(d: dict) -> "FamilySpec":
        return FamilySpec(
            family=d["family"],
            n=int(d["n"]),
            k=int(d.get("k", 0)),
            ring=Ring.from_json_dict(d.get("ring", {"ring": "Z"})),
            a=int(d.get("a", 1)),
        )


# --------------------------------------------------------------- summation forms


def _f_int_coeffs(n: int, k: int) -> list[int]:
    # exact integer accumulation of the defining sums, n >= 1
    out = [0] * (n // 2 + 2)
    for j in range(n // 2 + 1):
        b1 = binomial(n - 1, 2 * j + 1)
        out[j] += k * b1 + 2 * binomial(n, 2 * j)
        out[j + 1] -= k * b1
    return out


def f_family(n: int, k: int, ring: Ring = Z) -> Poly:
    """The generating family: summation form over Z, reduced into the ring."""
    if n < 0:
        raise DomainError("f_family requires n >= 0")
    _check_k_range(ring, k)
    if n == 0:
        return Poly.constant(ring, 2 - k)
    return Poly(ring, _f_int_coeffs(n, k))


def _interior(n: int, k: int, j: int) -> int:
    return k * binomial(n - 1, 2 * j + 1) - k * binomial(n - 1, 2 * j - 1) + 2 * binomial(n, 2 * j)


def _closed_form(n: int, k: int, ring: Ring, lo: int, hi: int, half: int) -> Poly:
    coeffs = [lo] + [_interior(n, k, j) for j in range(1, half)] + [hi]
    return Poly(ring, coeffs)


def f_expanded_even(n: int, k: int, ring: Ring = Z) -> Poly:
    """Closed coefficient form for even n > 1: ends k(n-1)+2 and 2-k."""
    if n <= 1 or n % 2:
        raise DomainError("f_expanded_even requires even n > 1")
    _check_k_range(ring, k)
    return _closed_form(n, k, ring, k * (n - 1) + 2, 2 - k, n // 2)


def f_expanded_odd(n: int, k: int, ring: Ring = Z) -> Poly:
    """Closed coefficient form for odd n > 1: ends k(n-1)+2 and -k(n-1)+2n."""
    if n <= 1 or n % 2 == 0:
        raise DomainError("f_expanded_odd requires odd n > 1")
    _check_k_range(ring, k)
    return _closed_form(n, k, ring, k * (n - 1) + 2, -k * (n - 1) + 2 * n, (n - 1) // 2)


def f_with_swapped_ends(n: int, k: int, ring: Ring = Z) -> Poly:
    """The closed form with its two end coefficients exchanged (diagnostic)."""
    if n <= 1:
        raise DomainError("f_with_swapped_ends requires n > 1")
    _check_k_range(ring, k)
    if n % 2 == 0:
        return _closed_form(n, k, ring, 2 - k, k * (n - 1) + 2, n // 2)
    return _closed_form(n, k, ring, -k * (n - 1) + 2 * n, k * (n - 1) + 2, (n - 1) // 2)


def g_family(n: int, k: int, ring: Ring = Z) -> Poly:
    """Even-n closed form with both end coefficients set to 2-k."""
    if n <= 1 or n % 2:
        raise DomainError("g_family requires even n > 1")
    _check_k_range(ring, k)
    return _closed_form(n, k, ring, 2 - k, 2 - k, n // 2)


def h_family(n: int, k: int, ring: Ring = Z) -> Poly:
    """Even-n closed form with both end coefficients set to k(n-1)+2."""
    if n <= 1 or n % 2:
        raise DomainError("h_family requires even n > 1")
    _check_k_range(ring, k)
    e = k * (n - 1) + 2
    return _closed_form(n, k, ring, e, e, n // 2)


def gstar_family(n: int, k: int, ring: Ring = Z) -> Poly:
    """Odd-n closed form with both end coefficients set to -k(n-1)+2n."""
    if n <= 1 or n % 2 == 0:
        raise DomainError("gstar_family requires odd n > 1")
    _check_k_range(ring, k)
    e = -k * (n - 1) + 2 * n
    return _closed_form(n, k, ring, e, e, (n - 1) // 2)


def hstar_family(n: int, k: int, ring: Ring = Z) -> Poly:
    """Odd-n closed form with both end coefficients set to k(n-1)+2."""
    if n <= 1 or n % 2 == 0:
        raise DomainError("hstar_family requires odd n > 1")
    _check_k_range(ring, k)
    e = k * (n - 1) + 2
    return _closed_form(n, k, ring, e, e, (n - 1) // 2)


def f_kind(n: int, kind: int) -> Poly:
    """Kind specializations over Z: kind 1 picks even binomials, 2 and 3 odd."""
    if n < 0:
        raise DomainError("f_kind requires n >= 0")
    if kind == 1:
        coeffs = [binomial(n, 2 * j) for j in range(n // 2 + 1)]
    elif kind in (2, 3):
        coeffs = [binomial(n, 2 * j + 1) for j in range((n + 1) // 2)]
    else:
        raise DomainError(f"kind must be 1, 2 or 3, got {kind}")
    return Poly(Z, coeffs)


def f_char2(n: int) -> Poly:
    """The GF(2) family member at k = 1 (the even-binomial part vanishes)."""
    if n < 1:
        raise DomainError("f_char2 requires n >= 1")
    out = [0] * (n // 2 + 2)
    for j in range(n // 2 + 1):
        b = binomial(n - 1, 2 * j + 1)
        out[j] += b
        out[j + 1] -= b
    return Poly(GF(2), out)


# ------------------------------------------------------------ reversed Dickson


def reversed_dickson(n: int, k: int, a: int = 1, ring: Ring = Z) -> Poly:
    """D_{n,k}(a, x), computed exactly with a checked integrality division.

    Each x^i coefficient is (-1)^i * (n-ki)/(n-i) * C(n-i, i) * a^(n-2i); the
    division is exact for every n >= 1, i <= n//2 and any integer k, which the
    construction verifies instead of assuming.
    """
    if n < 0:
        raise DomainError("reversed_dickson requires n >= 0")
    _check_k_range(ring, k)
    if n == 0:
        return Poly.constant(ring, 2 - k)
    a = ring.normalize(a)
    coeffs = []
    for i in range(n // 2 + 1):
        num = (n - k * i) * binomial(n - i, i)
        q, r = divmod(num, n - i)
        if r:
            raise RuntimeError(
                f"integrality invariant violated at n={n}, k={k}, i={i}: "
                f"{num} is not divisible by {n - i}"
            )
        coeffs.append((-1) ** i * q * a ** (n - 2 * i))
    return Poly(ring, coeffs)


def check_dickson_f_identity(n: int, k: int) -> bool:
    """True iff 2^n * D_{n,k}(1, x) equals f_{n,k}(1 - 4x) coefficientwise over Z."""
    if n < 1:
        raise DomainError("check_dickson_f_identity requires n >= 1")
    lhs = reversed_dickson(n, k).scale(2**n)
    rhs = f_family(n, k).compose_linear(1, -4)
    return lhs == rhs


# ----------------------------------------------------------------- dispatcher

_BUILDERS = {
    "f": lambda s: f_family(s.n, s.k, s.ring),
    "g": lambda s: g_family(s.n, s.k, s.ring),
    "h": lambda s: h_family(s.n, s.k, s.ring),
    "gstar": lambda s: gstar_family(s.n, s.k, s.ring),
    "hstar": lambda s: hstar_family(s.n, s.k, s.ring),
    "dickson": lambda s: reversed_dickson(s.n, s.k, s.a, s.ring),
    "fchar2": lambda s: f_char2(s.n),
    "kind1": lambda s: _kind_in_ring(s, 1),
    "kind2": lambda s: _kind_in_ring(s, 2),
    "kind3": lambda s: _kind_in_ring(s, 3),
}


def _kind_in_ring(spec: FamilySpec, kind: int) -> Poly:
    return Poly(spec.ring, f_kind(spec.n, kind).coeffs)


def build(spec: FamilySpec) -> Poly:
    """Construct the polynomial a FamilySpec describes."""
    return _BUILDERS[spec.family](spec)
