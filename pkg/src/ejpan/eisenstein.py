"""Exact arithmetic in the Eisenstein-Jacobi integers Z[rho].

Elements are ``x + y*rho`` with integer coefficients and ``rho**2 == rho - 1``.
Python integers are unbounded, so no operation here can overflow or round.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GeneratorTooSmall, InvalidGenerator, LabelError

MIN_NETWORK_NORM = 7


@dataclass(frozen=True, slots=True)
class EJInt:
    x: int
    y: int

    @classmethod
    def from_xyz(cls, x: int, y: int, z: int) -> EJInt:
        """Collapse ``x + y*rho + z*rho**2`` to two coordinates."""
        return cls(x - z, y + z)

    def __add__(self, other: EJInt) -> EJInt:
        return add(self, other)

    def __sub__(self, other: EJInt) -> EJInt:
        return sub(self, other)

    def __neg__(self) -> EJInt:
        return EJInt(-self.x, -self.y)

    def __mul__(self, other: EJInt) -> EJInt:
        return mul(self, other)

    def __str__(self) -> str:
        return format_label(self)


ZERO = EJInt(0, 0)
ONE = EJInt(1, 0)
RHO = EJInt(0, 1)
RHO2 = EJInt(-1, 1)

# Order matters: adjacency lists and every BFS tie-break follow it.
UNIT_OFFSETS: tuple[EJInt, ...] = (ONE, -ONE, RHO, -RHO, RHO2, -RHO2)


def add(p: EJInt, q: EJInt) -> EJInt:
    return EJInt(p.x + q.x, p.y + q.y)


def sub(p: EJInt, q: EJInt) -> EJInt:
    return EJInt(p.x - q.x, p.y - q.y)


def mul(p: EJInt, q: EJInt) -> EJInt:
    return EJInt(p.x * q.x - p.y * q.y, p.x * q.y + q.x * p.y + p.y * q.y)


def conj(p: EJInt) -> EJInt:
    """Complex conjugate; ``conj(rho) == 1 - rho``."""
    return EJInt(p.x + p.y, -p.y)


def norm(p: EJInt) -> int:
    return p.x * p.x + p.x * p.y + p.y * p.y


def canonical_key(p: EJInt) -> tuple[int, int, int]:
    """Total order used to pick residue representatives and sort nodes."""
    return (norm(p), p.x, p.y)


@dataclass(frozen=True)
class Generator:
    """A network generator ``a + b*rho`` with ``0 <= a <= b``."""

    a: int
    b: int
    value: EJInt = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (0 <= self.a <= self.b) or self.b == 0:
            raise InvalidGenerator(
                f"generator needs 0 <= a <= b and (a, b) != (0, 0); got ({self.a}, {self.b})"
            )
        object.__setattr__(self, "value", EJInt(self.a, self.b))

    @property
    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    @property
    def diameter(self) -> int:
        return (self.a + 2 * self.b) // 3

    def require_network(self) -> Generator:
        if self.norm < MIN_NETWORK_NORM:
            raise GeneratorTooSmall(
                f"N({self.a}+{self.b}*r) = {self.norm} < {MIN_NETWORK_NORM}; "
                "unit offsets collide and the network is not 6-regular"
            )
        return self

    def __str__(self) -> str:
        return format_label(self.value)


def congruent(p: EJInt, q: EJInt, g: Generator) -> bool:
    """True iff the generator divides ``p - q`` in Z[rho]."""
    d = mul(sub(p, q), conj(g.value))
    n = g.norm
    return d.x % n == 0 and d.y % n == 0


def _round_div(num: int, den: int) -> int:
    # nearest integer, halves rounded up; den > 0
    return (2 * num + den) // (2 * den)


def reduce(p: EJInt, g: Generator) -> EJInt:
    """Canonical representative of ``p`` modulo the generator.

    The quotient is rounded coordinate-wise to get a remainder near zero,
    then the 5x5 box of translates around it is searched for the minimum
    under ``canonical_key``. Every class member of norm <= N lies in that box.
    """
    alpha = g.value
    n = g.norm
    t = mul(p, conj(alpha))
    q = EJInt(_round_div(t.x, n), _round_div(t.y, n))
    r = sub(p, mul(q, alpha))
    best = r
    best_key = canonical_key(r)
    for i in range(-2, 3):
        for j in range(-2, 3):
            c = sub(r, mul(EJInt(i, j), alpha))
            k = canonical_key(c)
            if k < best_key:
                best, best_key = c, k
    return best


def hex_weight(p: EJInt) -> int:
    """Minimum of |x'| + |y'| + |z'| over all ``x' + y'rho + z'rho^2 == p``.

    Writing ``p = (x' - z') + (y' + z')rho`` the weight is a convex
    piecewise-linear function of ``z'`` whose minimum sits at one of the
    breakpoints ``0, -x, y``.
    """
    return min(abs(p.x + z) + abs(p.y - z) + abs(z) for z in (0, -p.x, p.y))


# --- labels -----------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)\s*(\*?\s*(?:r|ρ)(?:\s*(?:\^\s*2|²|2))?)?")


def format_label(p: EJInt) -> str:
    """ASCII label ``x+y*r``, e.g. ``2+3*r`` or ``-1+0*r``."""
    return f"{p.x}{p.y:+d}*r"


def parse_label(text: str) -> EJInt:
    """Parse a sum of terms in ``1``, ``r`` and ``r^2``.

    Accepts ``2+3*r``, ``r``, ``-r``, ``2``, ``3r``, ``r+r^2``, ``-1+r^2``
    and the unicode ``ρ``/``²`` forms; whitespace is ignored.
    """
    s = "".join(text.split())
    if not s:
        raise LabelError("empty label")
    pos = 0
    x = y = z = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise LabelError(f"cannot parse label {text!r}")
        sign, digits, unit = m.groups()
        if not digits and not unit:
            raise LabelError(f"cannot parse label {text!r}")
        if pos > 0 and not sign:
            raise LabelError(f"missing operator in label {text!r}")
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        if not unit:
            x += coef
        elif unit.rstrip().endswith(("2", "²")):
            z += coef
        else:
            y += coef
        pos = m.end()
    return EJInt.from_xyz(x, y, z)


def parse_alpha(text: str) -> Generator:
    """Parse ``a,b`` into a validated generator."""
    try:
        a_s, b_s = text.split(",")
        return Generator(int(a_s), int(b_s))
    except ValueError as exc:
        if isinstance(exc, InvalidGenerator):
            raise
        raise InvalidGenerator(f"expected 'a,b', got {text!r}") from exc
