"""Free reparametrization-indexed spaces on finite label sets.

A ``FreeGSpace`` of length L over labels U stands for the presheaf whose
value at a length l is the set of pairs (PL map [0,l] -> [0,L], label).
Tensoring adds lengths and pairs labels.  A ``TensorElem`` is a raw
representative of a point of an n-fold tensor evaluated at some total
length; :func:`elem_normalize` pushes the outer reparametrization into the
factors, yielding the canonical identity-outer form, so equality of points
in the quotient becomes decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadInputError, DuplicateLabelError, LengthChainMismatchError
from .rational import as_length, format_fraction, parse_fraction
from .reparam import PLHomeo, compose, decompose, identity, pl_eval_inv, pl_from_json


@dataclass(frozen=True)
class FreeGSpace:
    length: Fraction
    basis: tuple[str, ...]

    def to_json(self) -> dict:
        return {"free": {"len": format_fraction(self.length),
                         "basis": list(self.basis)}}


def free(length, labels: Iterable[str]) -> FreeGSpace:
    ell = as_length(length)
    basis = tuple(str(x) for x in labels)
    if len(set(basis)) != len(basis):
        raise DuplicateLabelError(f"labels not distinct: {basis}")
    return FreeGSpace(ell, basis)


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def tensor_free(f1: FreeGSpace, f2: FreeGSpace) -> FreeGSpace:
    basis = tuple(pair_label(a, b) for a in f1.basis for b in f2.basis)
    return FreeGSpace(f1.length + f2.length, basis)


def free_from_json(data) -> FreeGSpace:
    try:
        inner = data["free"]
        return free(parse_fraction(inner["len"]), inner["basis"])
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed free space: {exc}") from exc


@dataclass(frozen=True)
class Factor:
    """One tensor slot: a label of the free basis and its twist, a PL map
    from the slot's evaluation length onto the free space's length."""

    label: str
    twist: PLHomeo

    @property
    def length(self) -> Fraction:
        return self.twist.src_len

    @property
    def free_length(self) -> Fraction:
        return self.twist.dst_len


@dataclass(frozen=True)
class TensorElem:
    """Representative (outer, factors) of a tensor-product point.

    The outer map sends the evaluation interval onto the concatenation of
    the factor intervals; canonical form has outer = identity.
    """

    outer: PLHomeo
    factors: tuple[Factor, ...]

    @property
    def total_len(self) -> Fraction:
        return self.outer.src_len

    def is_canonical(self) -> bool:
        return self.outer.is_identity()

    def to_json(self) -> dict:
        return {
            "outer": self.outer.to_json(),
            "parts": [{"label": f.label, "twist": f.twist.to_json()}
                      for f in self.factors],
        }


def elem_make(outer: PLHomeo, parts: Sequence[tuple[str, PLHomeo]]) -> TensorElem:
    """Store a raw representative; lengths must chain exactly."""
    if not parts:
        raise BadInputError("a tensor element needs at least one factor")
    factors = tuple(Factor(str(label), twist) for label, twist in parts)
    inner_total = sum((f.length for f in factors), Fraction(0))
    if outer.dst_len != inner_total:
        raise LengthChainMismatchError(
            f"outer lands in [0,{outer.dst_len}] but factors span "
            f"[0,{inner_total}]")
    return TensorElem(outer, factors)


def elem_normalize(elem: TensorElem) -> TensorElem:
    """Absorb the outer map into the factors.

    Block lengths are the outer-preimages of the factor partial sums; the
    outer map decomposes along them and each block composes into the
    corresponding twist.  Idempotent.
    """
    if elem.is_canonical():
        return elem
    cuts = []
    acc = Fraction(0)
    for f in elem.factors:
        acc += f.length
        cuts.append(pl_eval_inv(elem.outer, acc))
    block_lens = [b - a for a, b in zip([Fraction(0)] + cuts, cuts)]
    blocks = decompose(elem.outer, block_lens)
    factors = tuple(
        Factor(f.label, compose(block, f.twist))
        for f, block in zip(elem.factors, blocks))
    return TensorElem(identity(elem.total_len), factors)


def elem_equal(e1: TensorElem, e2: TensorElem) -> bool:
    return elem_normalize(e1) == elem_normalize(e2)


def elem_from_json(data) -> TensorElem:
    try:
        outer = pl_from_json(data["outer"])
        parts = [(p["label"], pl_from_json(p["twist"])) for p in data["parts"]]
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed tensor element: {exc}") from exc
    return elem_make(outer, parts)
