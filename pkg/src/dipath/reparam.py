"""Piecewise-linear strictly increasing rational bijections between segments.

A ``PLHomeo`` models an orientation-preserving homeomorphism
[0, src_len] -> [0, dst_len] that is piecewise linear with rational
breakpoints.  This family is closed under composition, inverse, block tensor
and block decomposition, which is everything the path-algebra layers need,
and equality of canonical forms coincides with pointwise equality.

All arithmetic is exact (``fractions.Fraction``); there is no floating point
anywhere in the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadEndpointsError,
    BadInputError,
    LengthMismatchError,
    LengthSumMismatchError,
    NonMonotonicError,
    OutOfDomainError,
)
from .rational import as_length, format_fraction, parse_fraction

Break = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PLHomeo:
    """Canonical break list of a PL increasing bijection.

    Construct through :func:`make_pl`, :func:`identity` or :func:`mu`; direct
    instantiation skips canonicalization and breaks equality semantics.
    """

    breaks: tuple[Break, ...]

    @property
    def src_len(self) -> Fraction:
        return self.breaks[-1][0]

    @property
    def dst_len(self) -> Fraction:
        return self.breaks[-1][1]

    def is_identity(self) -> bool:
        return self.breaks == ((Fraction(0), Fraction(0)),
                               (self.src_len, self.src_len))

    def __repr__(self) -> str:
        pts = ", ".join(f"({x}, {y})" for x, y in self.breaks)
        return f"PLHomeo[{pts}]"

    def to_json(self) -> dict:
        return {
            "src": format_fraction(self.src_len),
            "dst": format_fraction(self.dst_len),
            "breaks": [[format_fraction(x), format_fraction(y)]
                       for x, y in self.breaks],
        }


def _canonical(breaks: Sequence[Break]) -> tuple[Break, ...]:
    """Drop interior breaks collinear with their neighbours."""
    kept: list[Break] = [breaks[0]]
    for i in range(1, len(breaks) - 1):
        x1, y1 = kept[-1]
        x2, y2 = breaks[i]
        x3, y3 = breaks[i + 1]
        if (y2 - y1) * (x3 - x2) != (y3 - y2) * (x2 - x1):
            kept.append(breaks[i])
    kept.append(breaks[-1])
    return tuple(kept)


def make_pl(src_len, dst_len, breaks: Iterable) -> PLHomeo:
    """Build a PLHomeo from raw break pairs, canonicalizing the result."""
    src = as_length(src_len)
    dst = as_length(dst_len)
    pts = [(Fraction(x), Fraction(y)) for x, y in breaks]
    if len(pts) < 2:
        raise BadEndpointsError("need at least the two endpoint breaks")
    if pts[0] != (0, 0):
        raise BadEndpointsError(f"first break must be (0, 0), got {pts[0]}")
    if pts[-1] != (src, dst):
        raise BadEndpointsError(
            f"last break must be ({src}, {dst}), got {pts[-1]}")
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x2 <= x1 or y2 <= y1:
            raise NonMonotonicError(
                f"breaks must strictly increase: ({x1},{y1}) then ({x2},{y2})")
    return PLHomeo(_canonical(pts))


def identity(length) -> PLHomeo:
    ell = as_length(length)
    return PLHomeo(((Fraction(0), Fraction(0)), (ell, ell)))


def mu(length) -> PLHomeo:
    """The linear rescaling [0, length] -> [0, 1], t |-> t / length."""
    ell = as_length(length)
    return PLHomeo(((Fraction(0), Fraction(0)), (ell, Fraction(1))))


def scale(src_len, dst_len) -> PLHomeo:
    """The linear map [0, src_len] -> [0, dst_len]."""
    return PLHomeo(((Fraction(0), Fraction(0)),
                    (as_length(src_len), as_length(dst_len))))


def pl_eval(phi: PLHomeo, t) -> Fraction:
    """Exact value of phi at t by linear interpolation."""
    t = Fraction(t)
    if t < 0 or t > phi.src_len:
        raise OutOfDomainError(f"{t} outside [0, {phi.src_len}]")
    bs = phi.breaks
    for i in range(len(bs) - 1):
        x2, y2 = bs[i + 1]
        if t <= x2:
            if t == x2:
                return y2
            x1, y1 = bs[i]
            if t == x1:
                return y1
            return y1 + (y2 - y1) * (t - x1) / (x2 - x1)
    return bs[-1][1]


def pl_eval_inv(phi: PLHomeo, y) -> Fraction:
    """Exact preimage phi^{-1}(y); phi is bijective by invariant."""
    y = Fraction(y)
    if y < 0 or y > phi.dst_len:
        raise OutOfDomainError(f"{y} outside [0, {phi.dst_len}]")
    bs = phi.breaks
    for i in range(len(bs) - 1):
        x2, y2 = bs[i + 1]
        if y <= y2:
            if y == y2:
                return x2
            x1, y1 = bs[i]
            if y == y1:
                return x1
            return x1 + (x2 - x1) * (y - y1) / (y2 - y1)
    return bs[-1][0]


def compose(phi: PLHomeo, psi: PLHomeo) -> PLHomeo:
    """Diagrammatic composite: apply phi first, then psi.

    The result evaluates as psi(phi(t)); its breakpoints are phi's break
    abscissas together with the phi-preimages of psi's break abscissas,
    collected in one merge sweep over both break lists.
    """
    if phi.dst_len != psi.src_len:
        raise LengthMismatchError(
            f"cannot chain [0,{phi.src_len}]->[0,{phi.dst_len}] "
            f"with [0,{psi.src_len}]->[0,{psi.dst_len}]")
    pb = phi.breaks
    # phi-preimages of psi's break abscissas, ascending
    pulled = []
    j = 0
    for y, _ in psi.breaks:
        while pb[j + 1][1] < y:
            j += 1
        x1, y1 = pb[j]
        x2, y2 = pb[j + 1]
        if y == y1:
            pulled.append((x1, y))
        elif y == y2:
            pulled.append((x2, y))
        else:
            pulled.append((x1 + (x2 - x1) * (y - y1) / (y2 - y1), y))
    # merge with phi's own breaks, dropping duplicate abscissas
    cuts = []
    i = j = 0
    while i < len(pb) or j < len(pulled):
        if j >= len(pulled) or (i < len(pb) and pb[i][0] <= pulled[j][0]):
            pair = pb[i]
            if j < len(pulled) and pulled[j][0] == pair[0]:
                j += 1
            i += 1
        else:
            pair = pulled[j]
            j += 1
        cuts.append(pair)
    # push the intermediate values through psi with a second sweep
    qb = psi.breaks
    pts = []
    k = 0
    for t, y in cuts:
        while qb[k + 1][0] < y:
            k += 1
        x1, z1 = qb[k]
        x2, z2 = qb[k + 1]
        if y == x1:
            pts.append((t, z1))
        elif y == x2:
            pts.append((t, z2))
        else:
            pts.append((t, z1 + (z2 - z1) * (y - x1) / (x2 - x1)))
    return PLHomeo(_canonical(pts))


def inverse(phi: PLHomeo) -> PLHomeo:
    return PLHomeo(tuple((y, x) for x, y in phi.breaks))


def tensor(*phis: PLHomeo) -> PLHomeo:
    """Block concatenation: the i-th block acts as phi_i shifted by the
    partial sums of the source and destination lengths."""
    if not phis:
        raise BadInputError("tensor needs at least one factor")
    pts: list[Break] = [(Fraction(0), Fraction(0))]
    off_x = Fraction(0)
    off_y = Fraction(0)
    for phi in phis:
        for x, y in phi.breaks[1:]:
            pts.append((off_x + x, off_y + y))
        off_x += phi.src_len
        off_y += phi.dst_len
    return PLHomeo(_canonical(pts))


def decompose(phi: PLHomeo, lengths: Sequence) -> tuple[PLHomeo, ...]:
    """Split phi into blocks with the given source lengths.

    The destination length of the i-th block is forced:
    dst_i = phi(sum of the first i lengths) - sum of the earlier dst lengths.
    Tensoring the blocks back recovers phi exactly, and the decomposition
    with these source lengths is unique.
    """
    lens = [as_length(v) for v in lengths]
    if sum(lens) != phi.src_len:
        raise LengthSumMismatchError(
            f"lengths sum to {sum(lens)}, expected {phi.src_len}")
    pieces = []
    a = Fraction(0)
    for ell in lens:
        b = a + ell
        fa = pl_eval(phi, a)
        xs = [a] + [x for x, _ in phi.breaks if a < x < b] + [b]
        pts = [(x - a, pl_eval(phi, x) - fa) for x in xs]
        pieces.append(PLHomeo(_canonical(pts)))
        a = b
    return tuple(pieces)


def equals(phi: PLHomeo, psi: PLHomeo) -> bool:
    """Structural equality of canonical forms, i.e. pointwise equality."""
    return phi == psi


def pl_from_json(data) -> PLHomeo:
    try:
        src = parse_fraction(data["src"])
        dst = parse_fraction(data["dst"])
        breaks = [(parse_fraction(x), parse_fraction(y))
                  for x, y in data["breaks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInputError(f"malformed PL map: {exc}") from exc
    return make_pl(src, dst, breaks)
