"""Cellular complexes with directed globular cells and their path algebra.

A complex is a finite list of states plus an ordered list of cells.  A cell
of disk dimension 0 is a directed edge between two states; a cell of disk
dimension 1 is a two-dimensional globe glued along two parallel paths
(its lower and upper boundary) that must already exist in the earlier part
of the complex.

Path expressions are trees built from elementary steps, length-adding
concatenation, length-one normalized concatenation, and reparametrization
by a PL bijection.  ``Complex.normalize`` rewrites any expression into its
unique normal form: a chain of minimal segments, each running through the
interior of a single cell with an explicit positive length and an exact PL
time law.  Boundary steps of a globe are recursively resolved into the
attached boundary path, so equal paths always share one representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    BadDimError,
    BadInputError,
    BadLengthError,
    BoundaryEndpointMismatchError,
    EndpointMismatchError,
    ForwardReferenceError,
    LengthMismatchError,
    OutOfDomainError,
    UnboundedEnumerationError,
    UnknownCellError,
    UnknownStateError,
)
from .rational import format_fraction, parse_fraction
from .reparam import (
    PLHomeo,
    compose,
    decompose,
    inverse,
    mu,
    pl_eval,
    pl_eval_inv,
    pl_from_json,
)

# ---------------------------------------------------------------------------
# path expressions


@dataclass(frozen=True)
class Step:
    """Elementary path t |-> (z, chi(t)) inside one cell.

    ``chi`` maps [0, length] onto [0, 1]; ``z`` is a rational point of the
    cell's disk (empty tuple for edges).  A boundary z of a globe denotes
    the attached boundary path.
    """

    cell: str
    z: tuple[Fraction, ...]
    chi: PLHomeo


@dataclass(frozen=True)
class Moore:
    """Length-adding concatenation."""

    left: "PathExpr"
    right: "PathExpr"


@dataclass(frozen=True)
class NormComp:
    """Normalized concatenation of two length-one paths."""

    left: "PathExpr"
    right: "PathExpr"


@dataclass(frozen=True)
class Repar:
    """Precomposition with a PL bijection onto the child's time interval."""

    path: "PathExpr"
    phi: PLHomeo


PathExpr = Union[Step, Moore, NormComp, Repar]


@dataclass(frozen=True)
class Seg:
    """One minimal segment of a normal form."""

    cell: str
    z: tuple[Fraction, ...]
    chi: PLHomeo  # [0, length] -> [0, 1]

    @property
    def length(self) -> Fraction:
        return self.chi.src_len


@dataclass(frozen=True)
class NormalPath:
    start: str
    end: str
    segs: tuple[Seg, ...]

    @property
    def total_len(self) -> Fraction:
        return sum((s.length for s in self.segs), Fraction(0))

    def carrier(self) -> tuple[str, ...]:
        return tuple(s.cell for s in self.segs)


def np_to_expr(np: NormalPath) -> PathExpr:
    expr: PathExpr = Step(np.segs[0].cell, np.segs[0].z, np.segs[0].chi)
    for seg in np.segs[1:]:
        expr = Moore(expr, Step(seg.cell, seg.z, seg.chi))
    return expr


def _sq_norm(z: tuple[Fraction, ...]) -> Fraction:
    return sum((zi * zi for zi in z), Fraction(0))


def repar_normal(np: NormalPath, phi: PLHomeo) -> NormalPath:
    """Reparametrize a normal form by phi, whose target interval must be the
    path's time interval.  phi splits at the preimages of the segment cuts
    and each block composes into the segment's time law."""
    if phi.dst_len != np.total_len:
        raise LengthMismatchError(
            f"phi lands in [0,{phi.dst_len}] but the path runs on "
            f"[0,{np.total_len}]")
    cuts = []
    acc = Fraction(0)
    for seg in np.segs:
        acc += seg.length
        cuts.append(pl_eval_inv(phi, acc))
    lens = [b - a for a, b in zip([Fraction(0)] + cuts, cuts)]
    blocks = decompose(phi, lens)
    segs = tuple(Seg(s.cell, s.z, compose(block, s.chi))
                 for s, block in zip(np.segs, blocks))
    return NormalPath(np.start, np.end, segs)


# ---------------------------------------------------------------------------
# cells and complexes


@dataclass(frozen=True)
class Cell:
    id: str
    disk_dim: int
    src: str
    dst: str
    boundary_minus: Optional[PathExpr] = None
    boundary_plus: Optional[PathExpr] = None


@dataclass(frozen=True)
class ComplexDesc:
    """Raw description; run :func:`validate` to obtain a usable complex."""

    states: tuple[str, ...]
    cells: tuple[Cell, ...]


def _expr_cells(expr: PathExpr) -> set[str]:
    if isinstance(expr, Step):
        return {expr.cell}
    if isinstance(expr, (Moore, NormComp)):
        return _expr_cells(expr.left) | _expr_cells(expr.right)
    if isinstance(expr, Repar):
        return _expr_cells(expr.path)
    raise BadInputError(f"not a path expression: {expr!r}")


class Complex:
    """A validated complex together with its path operations.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, desc: ComplexDesc):
        if len(set(desc.states)) != len(desc.states):
            raise UnknownStateError("state names must be distinct")
        ids = [c.id for c in desc.cells]
        if len(set(ids)) != len(ids):
            raise UnknownCellError("cell ids must be distinct")
        self.desc = desc
        self.states = desc.states
        self._cells: dict[str, Cell] = {}
        self._boundaries: dict[str, tuple[NormalPath, NormalPath]] = {}
        for index, cell in enumerate(desc.cells):
            self._admit(cell, {c.id for c in desc.cells[:index]})
            self._cells[cell.id] = cell
        self.loop_free = self._acyclic()
        self._arcs: dict[str, list[Cell]] = {s: [] for s in desc.states}
        for cell in sorted(desc.cells, key=lambda c: c.id):
            self._arcs[cell.src].append(cell)

    # -- construction-time checks

    def _admit(self, cell: Cell, earlier: set[str]) -> None:
        if cell.src not in self.states:
            raise UnknownStateError(f"cell {cell.id}: unknown state {cell.src}")
        if cell.dst not in self.states:
            raise UnknownStateError(f"cell {cell.id}: unknown state {cell.dst}")
        if cell.disk_dim == 0:
            if cell.boundary_minus is not None or cell.boundary_plus is not None:
                raise BadDimError(f"edge {cell.id} cannot carry boundary paths")
            return
        if cell.disk_dim != 1:
            raise BadDimError(
                f"cell {cell.id}: geometric cells have disk dimension 0 or 1, "
                f"got {cell.disk_dim}")
        if cell.boundary_minus is None or cell.boundary_plus is None:
            raise BadDimError(f"globe {cell.id} needs both boundary paths")
        nfs = []
        for side, expr in (("-", cell.boundary_minus),
                           ("+", cell.boundary_plus)):
            refs = _expr_cells(expr)
            bad = refs - earlier
            if bad:
                raise ForwardReferenceError(
                    f"boundary {side} of {cell.id} uses cells attached later "
                    f"or unknown: {sorted(bad)}")
            nf = self.normalize(expr)
            if nf.total_len != 1:
                raise BadLengthError(
                    f"boundary {side} of {cell.id} must have length 1, "
                    f"got {nf.total_len}")
            if (nf.start, nf.end) != (cell.src, cell.dst):
                raise BoundaryEndpointMismatchError(
                    f"boundary {side} of {cell.id} runs {nf.start}->{nf.end}, "
                    f"cell runs {cell.src}->{cell.dst}")
            nfs.append(nf)
        self._boundaries[cell.id] = (nfs[0], nfs[1])

    def _acyclic(self) -> bool:
        out: dict[str, list[str]] = {s: [] for s in self.states}
        indeg = {s: 0 for s in self.states}
        for cell in self._cells.values():
            out[cell.src].append(cell.dst)
            indeg[cell.dst] += 1
        queue = [s for s in self.states if indeg[s] == 0]
        seen = 0
        while queue:
            s = queue.pop()
            seen += 1
            for t in out[s]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        return seen == len(self.states)

    # -- cell access

    def cell(self, cid: str) -> Cell:
        try:
            return self._cells[cid]
        except KeyError:
            raise UnknownCellError(f"unknown cell {cid}") from None

    def boundary_normal(self, cid: str) -> tuple[NormalPath, NormalPath]:
        self.cell(cid)
        try:
            return self._boundaries[cid]
        except KeyError:
            raise BadDimError(f"cell {cid} has no boundary paths") from None

    # -- normalization

    def normalize(self, expr: PathExpr) -> NormalPath:
        if isinstance(expr, NormalPath):
            return expr
        if isinstance(expr, Step):
            return self._normalize_step(expr)
        if isinstance(expr, Moore):
            left = self.normalize(expr.left)
            right = self.normalize(expr.right)
            if left.end != right.start:
                raise EndpointMismatchError(
                    f"cannot concatenate: {left.end} != {right.start}")
            return NormalPath(left.start, right.end, left.segs + right.segs)
        if isinstance(expr, NormComp):
            left = self.normalize(expr.left)
            right = self.normalize(expr.right)
            for side in (left, right):
                if side.total_len != 1:
                    raise BadLengthError(
                        "normalized concatenation needs length-1 operands, "
                        f"got {side.total_len}")
            if left.end != right.start:
                raise EndpointMismatchError(
                    f"cannot concatenate: {left.end} != {right.start}")
            glued = NormalPath(left.start, right.end, left.segs + right.segs)
            return repar_normal(glued, inverse(mu(2)))
        if isinstance(expr, Repar):
            child = self.normalize(expr.path)
            return repar_normal(child, expr.phi)
        raise BadInputError(f"not a path expression: {expr!r}")

    def _normalize_step(self, step: Step) -> NormalPath:
        cell = self.cell(step.cell)
        if len(step.z) != cell.disk_dim:
            raise BadDimError(
                f"step in {cell.id}: point has {len(step.z)} coordinates, "
                f"cell disk dimension is {cell.disk_dim}")
        if step.chi.dst_len != 1:
            raise BadLengthError(
                f"step time law must land in [0,1], got [0,{step.chi.dst_len}]")
        sq = _sq_norm(step.z)
        if sq > 1:
            raise OutOfDomainError(f"point {step.z} outside the closed disk")
        if sq < 1 or cell.disk_dim == 0:
            return NormalPath(cell.src, cell.dst,
                              (Seg(cell.id, step.z, step.chi),))
        minus, plus = self.boundary_normal(cell.id)
        boundary = minus if step.z[0] < 0 else plus
        return repar_normal(boundary, step.chi)

    # -- composition operations

    def moore_compose(self, p: PathExpr, q: PathExpr) -> PathExpr:
        left = self.normalize(p)
        right = self.normalize(q)
        if left.end != right.start:
            raise EndpointMismatchError(
                f"cannot concatenate: {left.end} != {right.start}")
        return Moore(p, q)

    def normalized_compose(self, p: PathExpr, q: PathExpr) -> PathExpr:
        left = self.normalize(p)
        right = self.normalize(q)
        for side in (left, right):
            if side.total_len != 1:
                raise BadLengthError(
                    "normalized concatenation needs length-1 operands, "
                    f"got {side.total_len}")
        if left.end != right.start:
            raise EndpointMismatchError(
                f"cannot concatenate: {left.end} != {right.start}")
        return NormComp(p, q)

    def reparametrize_path(self, p: PathExpr, phi: PLHomeo) -> PathExpr:
        length = self.normalize(p).total_len
        if phi.dst_len != length:
            raise LengthMismatchError(
                f"phi lands in [0,{phi.dst_len}] but the path runs on "
                f"[0,{length}]")
        return Repar(p, phi)

    def carrier(self, p: PathExpr) -> tuple[str, ...]:
        return self.normalize(p).carrier()

    def is_minimal(self, p: PathExpr) -> bool:
        return len(self.normalize(p).segs) == 1

    # -- pointwise evaluation

    def eval_path(self, p, t):
        """The state at a junction time, else (cell, z, globe coordinate)."""
        np = p if isinstance(p, NormalPath) else self.normalize(p)
        t = Fraction(t)
        if t < 0 or t > np.total_len:
            raise OutOfDomainError(f"{t} outside [0, {np.total_len}]")
        acc = Fraction(0)
        for seg in np.segs:
            if t == acc:
                return self.cell(seg.cell).src
            if t < acc + seg.length:
                return (seg.cell, seg.z, pl_eval(seg.chi, t - acc))
            acc += seg.length
        return np.end

    # -- structural checks used by JSON ingestion

    def check_normal_path(self, np: NormalPath) -> NormalPath:
        if not np.segs:
            raise BadInputError("a path has at least one segment")
        for seg in np.segs:
            cell = self.cell(seg.cell)
            if len(seg.z) != cell.disk_dim:
                raise BadDimError(
                    f"segment in {cell.id}: wrong point arity {len(seg.z)}")
            if _sq_norm(seg.z) >= 1 and cell.disk_dim > 0:
                raise OutOfDomainError(
                    f"segment point {seg.z} must be interior")
            if seg.chi.dst_len != 1:
                raise BadLengthError("segment time law must land in [0,1]")
        chain = [self.cell(s.cell) for s in np.segs]
        for a, b in zip(chain, chain[1:]):
            if a.dst != b.src:
                raise EndpointMismatchError(
                    f"segments do not chain: {a.dst} != {b.src}")
        if np.start != chain[0].src or np.end != chain[-1].dst:
            raise EndpointMismatchError("endpoint states do not match segments")
        return np

    # -- carrier enumeration

    def enumerate_carriers(self, src: str, dst: str,
                           max_len: Optional[int] = None) -> list[tuple[str, ...]]:
        """All cell words realizable as carriers of paths src -> dst, in
        lexicographic order.  A bound is required when the complex has
        directed cycles."""
        if src not in self._arcs or dst not in self._arcs:
            raise UnknownStateError(f"unknown state {src!r} or {dst!r}")
        if max_len is None and not self.loop_free:
            raise UnboundedEnumerationError(
                "complex has loops: pass an explicit carrier bound")
        out: list[tuple[str, ...]] = []
        word: list[str] = []

        def walk(state: str) -> None:
            if word and state == dst:
                out.append(tuple(word))
            if max_len is not None and len(word) >= max_len:
                return
            for cell in self._arcs[state]:
                word.append(cell.id)
                walk(cell.dst)
                word.pop()

        walk(src)
        return sorted(out)


def validate(desc: ComplexDesc) -> Complex:
    """Check every structural invariant and return the usable complex."""
    return Complex(desc)


# ---------------------------------------------------------------------------
# JSON encoding


def expr_to_json(expr: PathExpr) -> dict:
    if isinstance(expr, Step):
        return {"step": {"cell": expr.cell,
                         "z": [format_fraction(v) for v in expr.z],
                         "chi": expr.chi.to_json()}}
    if isinstance(expr, Moore):
        return {"moore": [expr_to_json(expr.left), expr_to_json(expr.right)]}
    if isinstance(expr, NormComp):
        return {"normcomp": [expr_to_json(expr.left), expr_to_json(expr.right)]}
    if isinstance(expr, Repar):
        return {"repar": {"path": expr_to_json(expr.path),
                          "phi": expr.phi.to_json()}}
    raise BadInputError(f"not a path expression: {expr!r}")


def expr_from_json(data) -> PathExpr:
    if not isinstance(data, dict) or len(data) != 1:
        raise BadInputError(f"malformed path expression: {data!r}")
    kind, body = next(iter(data.items()))
    try:
        if kind == "step":
            return Step(str(body["cell"]),
                        tuple(parse_fraction(v) for v in body["z"]),
                        pl_from_json(body["chi"]))
        if kind == "moore":
            return Moore(expr_from_json(body[0]), expr_from_json(body[1]))
        if kind == "normcomp":
            return NormComp(expr_from_json(body[0]), expr_from_json(body[1]))
        if kind == "repar":
            return Repar(expr_from_json(body["path"]), pl_from_json(body["phi"]))
    except (KeyError, IndexError, TypeError) as exc:
        raise BadInputError(f"malformed path expression: {exc}") from exc
    raise BadInputError(f"unknown path expression kind {kind!r}")


def normal_path_to_json(np: NormalPath) -> dict:
    return {
        "from": np.start,
        "to": np.end,
        "segs": [{"cell": s.cell,
                  "z": [format_fraction(v) for v in s.z],
                  "len": format_fraction(s.length),
                  "chi": s.chi.to_json()} for s in np.segs],
    }


def normal_path_from_json(data, cx: Complex) -> NormalPath:
    try:
        segs = []
        for raw in data["segs"]:
            chi = pl_from_json(raw["chi"])
            if "len" in raw and parse_fraction(raw["len"]) != chi.src_len:
                raise BadInputError("segment length disagrees with time law")
            segs.append(Seg(str(raw["cell"]),
                            tuple(parse_fraction(v) for v in raw["z"]),
                            chi))
        np = NormalPath(str(data["from"]), str(data["to"]), tuple(segs))
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed normal path: {exc}") from exc
    return cx.check_normal_path(np)


def cell_to_json(cell: Cell) -> dict:
    out = {"id": cell.id, "dim": cell.disk_dim,
           "from": cell.src, "to": cell.dst}
    if cell.boundary_minus is not None:
        out["boundary_minus"] = expr_to_json(cell.boundary_minus)
    if cell.boundary_plus is not None:
        out["boundary_plus"] = expr_to_json(cell.boundary_plus)
    return out


def cell_from_json(data) -> Cell:
    try:
        minus = data.get("boundary_minus")
        plus = data.get("boundary_plus")
        return Cell(
            id=str(data["id"]),
            disk_dim=int(data["dim"]),
            src=str(data["from"]),
            dst=str(data["to"]),
            boundary_minus=expr_from_json(minus) if minus is not None else None,
            boundary_plus=expr_from_json(plus) if plus is not None else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInputError(f"malformed cell: {exc}") from exc


def complex_to_json(desc: ComplexDesc) -> dict:
    return {"states": list(desc.states),
            "cells": [cell_to_json(c) for c in desc.cells]}


def complex_from_json(data) -> ComplexDesc:
    try:
        states = tuple(str(s) for s in data["states"])
        cells = tuple(cell_from_json(c) for c in data["cells"])
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed complex: {exc}") from exc
    return ComplexDesc(states, cells)
