"""Exact greedy expansion of one in base beta, periodicity detection,
lexicographic admissibility.

The orbit of 1 under x -> beta*x - floor(beta*x) is tracked as integer
coordinate vectors in the power basis of Z[beta], so state comparison and
cycle detection are exact.  The left-limit convention is used throughout:
when beta*state is exactly an integer k the emitted digit is k-1 and the
state resets to 1, which makes simple Parry numbers come out purely periodic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebraic import RealAlgebraic, isolate_real_roots
from .polynomials import IntPolynomial, RatPolynomial

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class ExpansionRecord:
    """Digit data for d_beta(1): digits c_1 c_2 ... with minimal (m, p)."""

    digits: tuple[int, ...]
    preperiod: int | None
    period: int | None
    status: str  # "periodic" or "cap-exceeded"

    @property
    def mp(self) -> tuple[int | None, int | None]:
        return self.preperiod, self.period

    def digit(self, i: int) -> int:
        """1-indexed digit c_i of the infinite word."""
        if self.status != "periodic":
            if i <= len(self.digits):
                return self.digits[i - 1]
            raise IndexError("digit beyond computed prefix of a non-periodic record")
        assert self.preperiod is not None and self.period is not None
        idx = i - 1
        if idx < self.preperiod:
            return self.digits[idx]
        return self.digits[self.preperiod + (idx - self.preperiod) % self.period]


def minimal_periodic_record(digits: Sequence[int], m: int, p: int) -> ExpansionRecord:
    """Canonicalize an eventually periodic digit word to minimal (m, p)."""
    digits = list(digits)
    assert len(digits) >= m + p and p >= 1
    cycle = digits[m : m + p]
    best = p
    for d in range(1, p):
        if p % d == 0 and all(cycle[i] == cycle[i % d] for i in range(p)):
            best = d
            break
    p = best
    while m > 0 and digits[m - 1] == digits[m - 1 + p]:
        m -= 1
    return ExpansionRecord(tuple(digits[: m + p]), m, p, "periodic")


def _beta_of(p: IntPolynomial) -> RealAlgebraic:
    if not p.is_monic():
        raise ValueError("expansion base must be an algebraic integer (monic polynomial)")
    roots = isolate_real_roots(p)
    if not roots or not (roots[-1] > Fraction(1)):
        raise ValueError("no real root greater than one")
    return roots[-1]


def expand_one(p: IntPolynomial, cap: int = DEFAULT_CAP) -> ExpansionRecord:
    """Greedy digits of d_beta(1) for the largest real root beta > 1 of p.

    States are elements of Z[beta] in integer coordinates; the first repeated
    state yields the minimal preperiod and period directly, after which the
    digit word is reduced once more in case distinct states share digits.
    """
    beta = _beta_of(p)
    d = p.degree
    beta.refine_to(Fraction(1, 1 << 96))
    reduction = tuple(-p[i] for i in range(d))  # x^d mod p

    def times_x(vec: tuple[int, ...]) -> tuple[int, ...]:
        lead = vec[d - 1]
        shifted = (0,) + vec[: d - 1]
        if lead == 0:
            return shifted
        return tuple(s + lead * r for s, r in zip(shifted, reduction))

    unit = (1,) + (0,) * (d - 1)

    def floor_state(vec: tuple[int, ...]) -> tuple[int, bool]:
        """(floor of value, value is exactly that integer)."""
        while True:
            iv = RatPolynomial(vec).eval_interval(beta.rat_interval()) if d > 1 else None
            if d == 1:
                v = Fraction(vec[0])
                n = v.numerator // v.denominator
                return n, v == n
            flo = iv.lo.numerator // iv.lo.denominator
            fhi = iv.hi.numerator // iv.hi.denominator
            if flo == fhi and iv.lo > flo:
                return flo, False
            if iv.width < Fraction(1, 8):
                break
            beta.refine()
        q = RatPolynomial(vec)
        n = beta.floor_of(q)
        exact = beta.sign_of(q - RatPolynomial([n])) == 0
        return n, exact

    state = unit
    seen: dict[tuple[int, ...], int] = {state: 0}
    digits: list[int] = []
    for step in range(1, cap + 1):
        t = times_x(state)
        n, exact = floor_state(t)
        if exact:
            digits.append(n - 1)
            state = unit
        else:
            digits.append(n)
            state = tuple(c - n if i == 0 else c for i, c in enumerate(t))
        if state in seen:
            m = seen[state]
            return minimal_periodic_record(digits, m, step - m)
        seen[state] = step
    return ExpansionRecord(tuple(digits), None, None, "cap-exceeded")


# ---------------------------------------------------------------------------
# Lexicographic conditions
# ---------------------------------------------------------------------------

def _term(digits: Sequence[int], m: int, p: int, idx: int) -> int:
    """0-indexed term of the eventually periodic word digits with data (m, p)."""
    if idx < m:
        return digits[idx]
    return digits[m + (idx - m) % p]


def _lex_less(a_term, b_term, length: int) -> bool:
    """Strict lexicographic a < b decided within `length` terms (equal -> False)."""
    for i in range(length):
        x, y = a_term(i), b_term(i)
        if x != y:
            return x < y
    return False


def check_self_lex(record: ExpansionRecord | tuple[Sequence[int], int, int]) -> bool:
    """True iff every shift n >= 1 of the word is strictly below the word.

    A purely periodic word equals its own p-th shift, so it is first rewritten
    in the finite form c_1 ... c_{p-1} (c_p + 1) 0^infinity (the standard
    identification of purely periodic and finite expansions of one); the
    strict shift condition is then meaningful for it as well.
    """
    if isinstance(record, ExpansionRecord):
        if record.status != "periodic":
            raise ValueError("self-lex check needs a periodic record")
        digits, m, p = record.digits, record.preperiod, record.period
    else:
        digits, m, p = record
    digits = tuple(digits[: m + p])
    if m == 0:
        digits = digits[:-1] + (digits[-1] + 1, 0)
        m, p = p, 1
    horizon = 2 * (m + p) + 2
    base = lambda i: _term(digits, m, p, i)
    for n in range(1, m + p + 1):
        shifted = lambda i, n=n: _term(digits, m, p, i + n)
        if not _lex_less(shifted, base, horizon + n):
            return False
    return True


def is_admissible(word: Iterable[int], expansion: ExpansionRecord) -> bool:
    """True iff every shift of word (zero-padded) is strictly below d_beta(1)."""
    if expansion.status != "periodic":
        raise ValueError("admissibility needs a periodic expansion of one")
    w = list(word)
    digits, m, p = expansion.digits, expansion.preperiod, expansion.period
    base = lambda i: _term(digits, m, p, i)
    horizon = len(w) + m + 2 * p + 2
    for k in range(len(w) + 1):
        shifted = lambda i, k=k: w[k + i] if k + i < len(w) else 0
        if not _lex_less(shifted, base, horizon):
            return False
    return True


def records_equal(a: ExpansionRecord, b: ExpansionRecord) -> bool:
    """Equality of the two infinite digit words (canonical minimal forms)."""
    if a.status != "periodic" or b.status != "periodic":
        raise ValueError("only periodic records compare as infinite words")
    ca = minimal_periodic_record(list(a.digits), a.preperiod, a.period)
    cb = minimal_periodic_record(list(b.digits), b.preperiod, b.period)
    return ca.digits == cb.digits and ca.mp == cb.mp
