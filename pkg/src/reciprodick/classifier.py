"""Classification rules, the self-reciprocality oracle, and range scanners.

Each rule id names an executable predicate that evaluates the side
conditions of one exact classification:

  T2_1  over Z, even n > 1, family f:        palindromic iff k in {0, 2}
  T2_3  over Z, even n > 1, families g, h:   palindromic iff k = 0
  T2_4  over Z, odd n > 1, family f:         palindromic iff k = 1, or n = 3
                                             with k = 3 (a constant)
  T2_7  over Z, odd n > 1, gstar and hstar:  palindromic iff k = 1
  T3_1  over GF(p), p odd, even n > 1:       k = 0, or k = 2 with p not
                                             dividing n
  T3_4  over GF(p), p odd, odd n >= 1:       n = 1; or k = 0 and n = p^l; or
                                             n = 3, k = 3, p > 3; or k = 1 and
                                             p not dividing n + 1
  T4_1  over GF(2), n > 1, family fchar2:    palindromic iff n is even
  C3_2/C3_3/C3_5/C4_2  irreducibility corollaries: on their parameter
        families the polynomial is never simultaneously irreducible and
        self-reciprocal (its degree is odd there)
  L1    a self-reciprocal irreducible polynomial of degree >= 2 has even
        degree

The oracle is definition-based: build the polynomial and compare its
coefficient tuple with its own reversal.  ``scan`` evaluates predicate and
oracle over finite ranges and reports one Verdict per in-hypothesis spec;
disagreements are data (findings), never errors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .binomics import is_power_of, is_prime
from .errors import CapacityError, DomainError, HypothesisError
from .families import FamilySpec, build
from .ringpoly import GF, Poly, Z, gcd, pow_mod

THEOREM_IDS = (
    "T2_1", "T2_3", "T2_4", "T2_7",
    "T3_1", "T3_4", "T4_1",
    "C3_2", "C3_3", "C3_5", "C4_2",
    "L1",
)

_CLASSIFICATIONS = ("T2_1", "T2_3", "T2_4", "T2_7", "T3_1", "T3_4", "T4_1")
_COROLLARIES = ("C3_2", "C3_3", "C3_5", "C4_2")

DEFAULT_ODD_PRIMES = (3, 5, 7, 11, 13)
DEFAULT_K_WINDOW = tuple(range(-5, 7))

# trial-division irreducibility is used below this candidate count
_TRIAL_AUTO_LIMIT = 200_000
_TRIAL_HARD_LIMIT = 2_000_000


def normalize_theorem_id(name: str) -> str:
    """Map spellings like 't2.1' or 'l-1' onto the canonical rule id."""
    t = name.strip().upper().replace(".", "_").replace("-", "_")
    if t not in THEOREM_IDS:
        raise DomainError(f"unknown theorem id {name!r}")
    return t


@dataclass(frozen=True)
class Verdict:
    """One predicate-vs-oracle comparison for a single family member."""

    theorem: str
    spec: FamilySpec
    predicted: bool
    observed: bool
    note: str = ""

    @property
    def match(self) -> bool:
        return self.predicted == self.observed

    def to_json_dict(self) -> dict:
        d = {"theorem": self.theorem, "family": self.spec.family, "n": self.spec.n, "k": self.spec.k}
        if self.spec.ring.is_field:
            d["p"] = self.spec.ring.p
        d["predicted"] = self.predicted
        d["observed"] = self.observed
        d["match"] = self.match
        if self.note:
            d["note"] = self.note
        return d


def oracle_self_reciprocal(spec: FamilySpec) -> bool:
    """Definition-based oracle: build the polynomial and test the palindrome."""
    return build(spec).is_self_reciprocal()


# ------------------------------------------------------------------ predicates


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisError(message)


def predicate(theorem: str, spec: FamilySpec) -> bool:
    """Evaluate a classification rule's side conditions on an in-range spec."""
    t = normalize_theorem_id(theorem)
    n, k, ring = spec.n, spec.k, spec.ring
    if t == "T2_1":
        _require(spec.family == "f", "T2_1 applies to family f")
        _require(ring == Z, "T2_1 applies over Z")
        _require(n > 1 and n % 2 == 0, "T2_1 requires even n > 1")
        return k in (0, 2)
    if t == "T2_3":
        _require(spec.family in ("g", "h"), "T2_3 applies to families g and h")
        _require(ring == Z, "T2_3 applies over Z")
        _require(n > 1 and n % 2 == 0, "T2_3 requires even n > 1")
        return k == 0
    if t == "T2_4":
        _require(spec.family == "f", "T2_4 applies to family f")
        _require(ring == Z, "T2_4 applies over Z")
        _require(n > 1 and n % 2 == 1, "T2_4 requires odd n > 1")
        return k == 1 or (n == 3 and k == 3)
    if t == "T2_7":
        _require(spec.family in ("gstar", "hstar"), "T2_7 applies to families gstar and hstar")
        _require(ring == Z, "T2_7 applies over Z")
        _require(n > 1 and n % 2 == 1, "T2_7 requires odd n > 1")
        return k == 1
    if t == "T3_1":
        _require(spec.family == "f", "T3_1 applies to family f")
        _require(ring.is_field and ring.p != 2, "T3_1 applies over GF(p) with p odd")
        _require(n > 1 and n % 2 == 0, "T3_1 requires even n > 1")
        return k == 0 or (k == 2 and n % ring.p != 0)
    if t == "T3_4":
        _require(spec.family == "f", "T3_4 applies to family f")
        _require(ring.is_field and ring.p != 2, "T3_4 applies over GF(p) with p odd")
        _require(n >= 1 and n % 2 == 1, "T3_4 requires odd n >= 1")
        p = ring.p
        return (
            n == 1
            or (k == 0 and is_power_of(n, p))
            or (n == 3 and k == 3 and p > 3)
            or (k == 1 and (n + 1) % p != 0)
        )
    if t == "T4_1":
        _require(spec.family == "fchar2", "T4_1 applies to family fchar2")
        _require(ring == GF(2), "T4_1 applies over F2")
        _require(n > 1, "T4_1 requires n > 1")
        return n % 2 == 0
    raise DomainError(f"{t} is not a classification rule; use check_corollary or lemma_l1")


# -------------------------------------------------------------- irreducibility


def _prime_factors(d: int) -> list[int]:
    out = []
    q = 2
    while q * q <= d:
        if d % q == 0:
            out.append(q)
            while d % q == 0:
                d //= q
        q += 1
    if d > 1:
        out.append(d)
    return out


def _trial_candidates(p: int, deg: int) -> int:
    return sum(p**d for d in range(1, deg // 2 + 1))


def is_irreducible(a: Poly, method: str = "auto") -> bool:
    """Irreducibility over GF(p).

    ``trial`` divides by every monic polynomial of degree <= deg/2 and is the
    desk-scale oracle; ``gcd`` runs the x^(p^d) - x distinct-degree criterion
    and handles large degrees.  ``auto`` picks by candidate count.
    """
    if not a.ring.is_field:
        raise DomainError("irreducibility testing requires a prime-field ring")
    deg = a.degree
    if deg is None or deg < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    if deg == 1:
        return True
    p = a.ring.p
    if method == "auto":
        small = deg <= 10 and _trial_candidates(p, deg) <= _TRIAL_AUTO_LIMIT
        method = "trial" if small else "gcd"
    if method == "trial":
        if _trial_candidates(p, deg) > _TRIAL_HARD_LIMIT:
            raise CapacityError("trial division out of desk scale; use method='gcd'")
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                if (a % Poly(a.ring, tail + (1,))).is_zero():
                    return False
        return True
    if method == "gcd":
        f = a.monic()
        x = Poly.x(a.ring)
        if pow_mod(x, p**deg, f) != x % f:
            return False
        for r in _prime_factors(deg):
            h = pow_mod(x, p ** (deg // r), f) - (x % f)
            if gcd(h, f).degree != 0:
                return False
        return True
    raise DomainError(f"unknown irreducibility method {method!r}")


def lemma_l1(a: Poly) -> bool:
    """Even-degree law: no self-reciprocal irreducible has odd degree >= 3."""
    deg = a.degree
    if deg is None or deg < 2 or deg % 2 == 0:
        return True
    if not a.is_self_reciprocal():
        return True
    return not is_irreducible(a)


def check_corollary(corollary: str, spec: FamilySpec) -> bool:
    """True iff the spec's polynomial is not both irreducible and palindromic.

    Each corollary pins a parameter family on which the constructed
    polynomial has odd degree, so the conjunction (with degree >= 2) must
    never hold.
    """
    t = normalize_theorem_id(corollary)
    n, k, ring = spec.n, spec.k, spec.ring
    if t == "C3_2":
        _require(spec.family == "f", "C3_2 applies to family f")
        _require(ring.is_field and ring.p != 2, "C3_2 applies over GF(p) with p odd")
        _require(k == 0, "C3_2 requires k = 0")
        _require(n > 2 and n % 4 == 2, "C3_2 requires n > 2 with n = 2 mod 4")
    elif t == "C3_3":
        _require(spec.family == "f", "C3_3 applies to family f")
        _require(ring.is_field and ring.p != 2, "C3_3 applies over GF(p) with p odd")
        _require(k == 2, "C3_3 requires k = 2")
        _require(n % 4 == 0 and n > 0, "C3_3 requires n = 0 mod 4")
        _require(n % ring.p != 0, "C3_3 requires p not dividing n")
    elif t == "C3_5":
        _require(spec.family == "f", "C3_5 applies to family f")
        _require(ring.is_field and ring.p != 2, "C3_5 applies over GF(p) with p odd")
        _require(k == 1, "C3_5 requires k = 1")
        _require(n % 4 == 3, "C3_5 requires n = 3 mod 4")
        _require((n + 1) % ring.p != 0, "C3_5 requires p not dividing n + 1")
    elif t == "C4_2":
        _require(spec.family == "fchar2", "C4_2 applies to family fchar2")
        _require(ring == GF(2), "C4_2 applies over F2")
        _require(n > 2 and n % 4 == 2, "C4_2 requires n > 2 with n = 2 mod 4")
    else:
        raise DomainError(f"{t} is not a corollary id")
    a = build(spec)
    deg = a.degree
    if deg is None or deg < 2:
        return True
    if not a.is_self_reciprocal():
        return True
    return not is_irreducible(a)


# ------------------------------------------------------------------- scanning


@dataclass(frozen=True)
class _Rule:
    families: tuple[str, ...]
    ring: str  # "Z", "Fp" or "F2"
    parity: int | None
    n_min: int
    n_max: int


_RULES = {
    "T2_1": _Rule(("f",), "Z", 0, 2, 200),
    "T2_3": _Rule(("g", "h"), "Z", 0, 2, 200),
    "T2_4": _Rule(("f",), "Z", 1, 3, 199),
    "T2_7": _Rule(("gstar", "hstar"), "Z", 1, 3, 199),
    "T3_1": _Rule(("f",), "Fp", 0, 2, 200),
    "T3_4": _Rule(("f",), "Fp", 1, 1, 199),
    "T4_1": _Rule(("fchar2",), "F2", None, 2, 200),
    # corollary defaults keep the constructed degree at most 10
    "C3_2": _Rule(("f",), "Fp", 0, 6, 18),
    "C3_3": _Rule(("f",), "Fp", 0, 4, 20),
    "C3_5": _Rule(("f",), "Fp", 1, 3, 19),
    "C4_2": _Rule(("fchar2",), "F2", 0, 6, 18),
    "L1": _Rule(("f", "fchar2"), "Fp", None, 1, 20),
}


def _check_odd_primes(p_list) -> list[int]:
    ps = sorted(set(p_list))
    for p in ps:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if p == 2:
            raise DomainError("this rule is stated for odd primes")
    return ps


def _compare(theorem: str, spec: FamilySpec) -> Verdict:
    pred = predicate(theorem, spec)
    obs = oracle_self_reciprocal(spec)
    note = "" if pred == obs else "predicate and oracle disagree"
    return Verdict(theorem, spec, pred, obs, note)


def scan(theorem, n_min=None, n_max=None, k_values=None, p_list=None) -> list[Verdict]:
    """Evaluate one rule over finite ranges, one Verdict per in-range spec.

    Iteration order is (n, then k, then p, then family), so output is
    deterministic.  Mismatches are reported as data, not raised.
    """
    t = normalize_theorem_id(theorem)
    rule = _RULES[t]
    n_lo = rule.n_min if n_min is None else max(n_min, rule.n_min)
    n_hi = rule.n_max if n_max is None else n_max
    ns = [n for n in range(n_lo, n_hi + 1) if rule.parity is None or n % 2 == rule.parity]

    if t in _CLASSIFICATIONS:
        if rule.ring == "Z":
            ks = list(DEFAULT_K_WINDOW) if k_values is None else list(k_values)
            return [
                _compare(t, FamilySpec(fam, n, k))
                for n in ns
                for k in ks
                for fam in rule.families
            ]
        if rule.ring == "F2":
            return [_compare(t, FamilySpec("fchar2", n, 1, GF(2))) for n in ns]
        ps = _check_odd_primes(p_list or DEFAULT_ODD_PRIMES)
        out = []
        for n in ns:
            for k in range(0, max(ps)):
                if k_values is not None and k not in k_values:
                    continue
                for p in ps:
                    if k <= p - 1:
                        out.append(_compare(t, FamilySpec("f", n, k, GF(p))))
        return out

    if t in _COROLLARIES:
        return _scan_corollary(t, ns, p_list)
    return _scan_lemma_l1(ns, p_list)


def _scan_corollary(t: str, ns, p_list) -> list[Verdict]:
    fixed_k = {"C3_2": 0, "C3_3": 2, "C3_5": 1, "C4_2": 1}[t]
    residue = {"C3_2": 2, "C3_3": 0, "C3_5": 3, "C4_2": 2}[t]
    out = []
    if t == "C4_2":
        for n in ns:
            if n % 4 != residue:
                continue
            spec = FamilySpec("fchar2", n, 1, GF(2))
            obs = check_corollary(t, spec)
            out.append(Verdict(t, spec, True, obs, "" if obs else "corollary violated"))
        return out
    ps = _check_odd_primes(p_list or DEFAULT_ODD_PRIMES)
    for n in ns:
        if n % 4 != residue:
            continue
        for p in ps:
            if t == "C3_3" and n % p == 0:
                continue
            if t == "C3_5" and (n + 1) % p == 0:
                continue
            spec = FamilySpec("f", n, fixed_k, GF(p))
            obs = check_corollary(t, spec)
            out.append(Verdict(t, spec, True, obs, "" if obs else "corollary violated"))
    return out


def _scan_lemma_l1(ns, p_list) -> list[Verdict]:
    ps = sorted(set(p_list or ((2,) + DEFAULT_ODD_PRIMES)))
    for p in ps:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    out = []
    for n in ns:
        for k in range(0, max(ps)):
            for p in ps:
                if p == 2:
                    if k == 1 and n >= 1:
                        spec = FamilySpec("fchar2", n, 1, GF(2))
                    else:
                        continue
                elif k <= p - 1:
                    spec = FamilySpec("f", n, k, GF(p))
                else:
                    continue
                obs = lemma_l1(build(spec))
                out.append(Verdict("L1", spec, True, obs, "" if obs else "odd-degree srim found"))
    return out


def mismatches(verdicts) -> list[Verdict]:
    """The sub-list of verdicts whose prediction disagrees with the oracle."""
    return [v for v in verdicts if not v.match]
