"""Rewriting engine for path spaces of a one-cell pushout.

When a new cell is glued onto a base complex A, every path of the extended
complex X decomposes into runs through A interleaved with passes through the
new cell.  The formal side of that statement is a diagram indexed by tuples
of triples (state, flag, state): flag 0 slots hold paths of A, flag 1 slots
hold paths of the freshly attached cell (either an injected A-path or a
genuine cell path).  Two rewrite rules simplify an element:

* R1 merges two adjacent flag-0 slots by concatenating their paths;
* R2 lowers a flag-1 slot whose content already lives in A (an injected
  path, or a cell path sitting on the boundary sphere).

Each rule strictly decreases the degree (tuple length plus flag sum), so
rewriting terminates; the normal forms match the path normal forms of X,
which is what :func:`pushout_check` verifies carrier by carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Union

from .cellcomplex import (
    Cell,
    Complex,
    ComplexDesc,
    Moore,
    NormalPath,
    Seg,
    Step,
    normal_path_from_json,
    normal_path_to_json,
    np_to_expr,
    repar_normal,
    validate,
)
from .errors import (
    BadInputError,
    BadLengthError,
    ComplexMismatchError,
    EndpointMismatchError,
    NoBoundaryDataError,
    NotComposableHereError,
    OutOfDomainError,
    WrongEndpointsError,
)
from .rational import format_fraction, parse_fraction
from .reparam import PLHomeo, mu, pl_from_json

Triple = tuple[str, int, str]


@dataclass(frozen=True)
class ReedyObj:
    """A tuple of chained triples with the distinguished pair (u, v)."""

    u: str
    v: str
    triples: tuple[Triple, ...]


def make_obj(u: str, v: str, triples) -> ReedyObj:
    trips = tuple((str(a), int(e), str(b)) for a, e, b in triples)
    if not trips:
        raise BadInputError("an index object needs at least one triple")
    for (_, e, b), (a2, _, _) in zip(trips, trips[1:]):
        if b != a2:
            raise EndpointMismatchError(
                f"triples do not chain: {b} != {a2}")
    for a, e, b in trips:
        if e not in (0, 1):
            raise BadInputError(f"flag must be 0 or 1, got {e}")
        if e == 1 and (a, b) != (u, v):
            raise WrongEndpointsError(
                f"flag-1 triple must run {u} -> {v}, got {a} -> {b}")
    return ReedyObj(u, v, trips)


def degree(obj: ReedyObj) -> int:
    return len(obj.triples) + sum(e for _, e, _ in obj.triples)


@dataclass(frozen=True)
class APath:
    """Flag-0 slot: a path of the base complex."""

    path: NormalPath


@dataclass(frozen=True)
class InjPath:
    """Flag-1 slot holding an injected base path."""

    path: NormalPath


@dataclass(frozen=True)
class CellPath:
    """Flag-1 slot holding a pass through the new cell at disk point z."""

    z: tuple[Fraction, ...]
    chi: PLHomeo


Entry = Union[APath, InjPath, CellPath]


@dataclass(frozen=True)
class ReedyElem:
    obj: ReedyObj
    entries: tuple[Entry, ...]


def _sq_norm(z: tuple[Fraction, ...]) -> Fraction:
    return sum((zi * zi for zi in z), Fraction(0))


def make_elem(obj: ReedyObj, entries, base: Complex) -> ReedyElem:
    entries = tuple(entries)
    if len(entries) != len(obj.triples):
        raise BadInputError(
            f"{len(obj.triples)} slots but {len(entries)} entries")
    for (a, e, b), entry in zip(obj.triples, entries):
        if isinstance(entry, APath):
            if e != 0:
                raise BadInputError("flag-1 slot holds a base path")
            base.check_normal_path(entry.path)
            if (entry.path.start, entry.path.end) != (a, b):
                raise EndpointMismatchError(
                    f"slot path runs {entry.path.start}->{entry.path.end}, "
                    f"slot is {a}->{b}")
        elif isinstance(entry, InjPath):
            if e != 1:
                raise BadInputError("flag-0 slot holds an injected path")
            base.check_normal_path(entry.path)
            if (entry.path.start, entry.path.end) != (a, b):
                raise EndpointMismatchError(
                    f"injected path runs {entry.path.start}->{entry.path.end}")
        elif isinstance(entry, CellPath):
            if e != 1:
                raise BadInputError("flag-0 slot holds a cell path")
            if _sq_norm(entry.z) > 1:
                raise OutOfDomainError(
                    f"cell point {entry.z} outside the closed disk")
            if entry.chi.dst_len != 1:
                raise BadLengthError("cell time law must land in [0,1]")
        else:
            raise BadInputError(f"not an entry: {entry!r}")
    return ReedyElem(obj, entries)


# ---------------------------------------------------------------------------
# single-step arrows


def apply_composition(elem: ReedyElem, i: int) -> ReedyElem:
    """Merge the flag-0 slots i and i+1 by path concatenation."""
    trips = elem.obj.triples
    if i < 0 or i + 1 >= len(trips):
        raise NotComposableHereError(f"no adjacent pair at {i}")
    (a, e1, b), (_, e2, c) = trips[i], trips[i + 1]
    if e1 != 0 or e2 != 0:
        raise NotComposableHereError(
            f"slots {i} and {i+1} are not both flag 0")
    left = elem.entries[i]
    right = elem.entries[i + 1]
    assert isinstance(left, APath) and isinstance(right, APath)
    merged = NormalPath(left.path.start, right.path.end,
                        left.path.segs + right.path.segs)
    obj = ReedyObj(elem.obj.u, elem.obj.v,
                   trips[:i] + ((a, 0, c),) + trips[i + 2:])
    return ReedyElem(obj, elem.entries[:i] + (APath(merged),)
                     + elem.entries[i + 2:])


def apply_inclusion(elem: ReedyElem, i: int) -> ReedyElem:
    """Raise the flag-0 slot i with endpoints (u, v) into a flag-1 slot."""
    trips = elem.obj.triples
    if i < 0 or i >= len(trips):
        raise WrongEndpointsError(f"no slot at {i}")
    a, e, b = trips[i]
    if e != 0 or (a, b) != (elem.obj.u, elem.obj.v):
        raise WrongEndpointsError(
            f"slot {i} is not a flag-0 slot running "
            f"{elem.obj.u} -> {elem.obj.v}")
    entry = elem.entries[i]
    assert isinstance(entry, APath)
    obj = ReedyObj(elem.obj.u, elem.obj.v,
                   trips[:i] + ((a, 1, b),) + trips[i + 1:])
    return ReedyElem(obj, elem.entries[:i] + (InjPath(entry.path),)
                     + elem.entries[i + 1:])


# ---------------------------------------------------------------------------
# normalization


def _check_cell(elem: ReedyElem, cell: Cell) -> None:
    if (cell.src, cell.dst) != (elem.obj.u, elem.obj.v):
        raise ComplexMismatchError(
            f"cell {cell.id} runs {cell.src}->{cell.dst}, element expects "
            f"{elem.obj.u}->{elem.obj.v}")


def _boundary_path(base: Complex, cell: Cell,
                   z: tuple[Fraction, ...]) -> NormalPath:
    if cell.disk_dim == 1:
        minus = base.normalize(cell.boundary_minus)
        plus = base.normalize(cell.boundary_plus)
        return minus if z[0] < 0 else plus
    raise NoBoundaryDataError(
        f"no boundary interpretation for a dimension-{cell.disk_dim} "
        f"cell point {z}")


def _demotions(elem: ReedyElem, base: Complex, cell: Cell) -> list[int]:
    out = []
    for i, entry in enumerate(elem.entries):
        if isinstance(entry, InjPath):
            out.append(i)
        elif isinstance(entry, CellPath):
            if len(entry.z) != cell.disk_dim:
                raise ComplexMismatchError(
                    f"cell point arity {len(entry.z)} does not match "
                    f"disk dimension {cell.disk_dim}")
            if _sq_norm(entry.z) == 1:
                out.append(i)
    return out


def _demote(elem: ReedyElem, i: int, base: Complex, cell: Cell) -> ReedyElem:
    entry = elem.entries[i]
    if isinstance(entry, InjPath):
        path = entry.path
    else:
        assert isinstance(entry, CellPath)
        path = repar_normal(_boundary_path(base, cell, entry.z), entry.chi)
    a, _, b = elem.obj.triples[i]
    obj = ReedyObj(elem.obj.u, elem.obj.v,
                   elem.obj.triples[:i] + ((a, 0, b),)
                   + elem.obj.triples[i + 1:])
    return ReedyElem(obj, elem.entries[:i] + (APath(path),)
                     + elem.entries[i + 1:])


def _merges(elem: ReedyElem) -> list[int]:
    trips = elem.obj.triples
    return [i for i in range(len(trips) - 1)
            if trips[i][1] == 0 and trips[i + 1][1] == 0]


def rewrite_steps(elem: ReedyElem, base: Complex, cell: Cell) -> list[ReedyElem]:
    """Every element reachable in exactly one rewrite step."""
    out = [apply_composition(elem, i) for i in _merges(elem)]
    out.extend(_demote(elem, i, base, cell)
               for i in _demotions(elem, base, cell))
    return out


def is_simplified(elem: ReedyElem, base: Complex, cell: Cell) -> bool:
    return not _merges(elem) and not _demotions(elem, base, cell)


def normalize_elem(elem: ReedyElem, base: Complex, cell: Cell) -> ReedyElem:
    """Exhaust merges and demotions, leftmost rule first.

    The degree drops at every step, which bounds the rewrite length by the
    starting degree; the result has no adjacent flag-0 slots and every cell
    point strictly interior.
    """
    _check_cell(elem, cell)
    current = elem
    while True:
        merges = _merges(current)
        if merges:
            nxt = apply_composition(current, merges[0])
        else:
            demotions = _demotions(current, base, cell)
            if not demotions:
                return current
            nxt = _demote(current, demotions[0], base, cell)
        assert degree(nxt.obj) < degree(current.obj), "degree must decrease"
        current = nxt


# ---------------------------------------------------------------------------
# realization in the pushout complex


def pushout_complex(base: Complex, cell: Cell) -> Complex:
    return validate(ComplexDesc(base.states, base.desc.cells + (cell,)))


def realize(elem: ReedyElem, pushout: Complex, cell_id: str) -> NormalPath:
    """The concatenated path of X named by the element's slots."""
    cell = pushout.cell(cell_id)
    _check_cell(elem, cell)
    exprs = []
    for entry in elem.entries:
        if isinstance(entry, (APath, InjPath)):
            exprs.append(np_to_expr(entry.path))
        else:
            exprs.append(Step(cell_id, entry.z, entry.chi))
    out = exprs[0]
    for e in exprs[1:]:
        out = Moore(out, e)
    return pushout.normalize(out)


# ---------------------------------------------------------------------------
# carrier-level pushout verification


def _a_carriers(base: Complex, bound: int) -> dict[tuple[str, str], list]:
    table = {}
    for a, b in product(base.states, repeat=2):
        table[(a, b)] = base.enumerate_carriers(a, b, bound)
    return table


def _interleavings(base: Complex, cell: Cell, bound: int):
    """Carrier words of the pushout generated from simplified shapes.

    A shape is a0 [cell] a1 [cell] ... [cell] ak where each run a_i is an
    A-carrier (possibly empty when its endpoints coincide) and no two runs
    are adjacent.  Yields (word, runs) pairs; runs keep the slot structure
    for building witness elements.
    """
    table = _a_carriers(base, bound)
    u, v = cell.src, cell.dst
    out = []

    def runs_from(state: str, budget: int, prefix_word, prefix_runs,
                  final: bool) -> None:
        # final run: may stop at any state; else the run must land on u.
        if final:
            for target in base.states:
                for word in ([()] if target == state else []) + [
                        w for w in table[(state, target)] if len(w) <= budget]:
                    out.append((prefix_word + word,
                                prefix_runs + ((word, state, target),)))
        else:
            if budget < 1:
                return
            choices = ([()] if state == u else []) + [
                w for w in table[(state, u)] if len(w) < budget]
            for word in choices:
                cell_slot = prefix_runs + ((word, state, u), ("CELL",))
                runs_from(v, budget - len(word) - 1,
                          prefix_word + word + (cell.id,), cell_slot,
                          final=False)
                runs_from(v, budget - len(word) - 1,
                          prefix_word + word + (cell.id,), cell_slot,
                          final=True)

    for start in base.states:
        runs_from(start, bound, (), (), final=False)
    # k = 0 shapes are plain base carriers
    for (a, b), words in sorted(table.items()):
        for word in words:
            out.append((word, ((word, a, b),)))
    return out


def _witness_elem(base: Complex, cell: Cell, runs) -> ReedyElem:
    """A concrete simplified element realizing the given slot structure."""
    triples = []
    entries = []
    for run in runs:
        if run == ("CELL",):
            triples.append((cell.src, 1, cell.dst))
            z = (Fraction(0),) * cell.disk_dim
            entries.append(CellPath(z, mu(1)))
        else:
            word, a, b = run
            if not word:
                continue
            triples.append((a, 0, b))
            segs = []
            for cid in word:
                c = base.cell(cid)
                z = (Fraction(0),) * c.disk_dim
                segs.append(Seg(cid, z, mu(1)))
            entries.append(APath(NormalPath(a, b, tuple(segs))))
    obj = make_obj(cell.src, cell.dst, triples)
    return make_elem(obj, entries, base)


def pushout_check(base: Complex, cell: Cell, bound: int) -> dict:
    """Compare base-side interleavings against pushout carriers.

    The left list enumerates carrier words from simplified element shapes,
    instantiating one witness element per shape and checking that it is a
    rewriting fixpoint whose realization has the predicted carrier.  The
    right list enumerates the pushout's carriers directly.
    """
    pushout = pushout_complex(base, cell)
    lhs_pairs = _interleavings(base, cell, bound)
    lhs = sorted(word for word, _ in lhs_pairs)
    if len(set(lhs)) != len(lhs):
        raise AssertionError("shape enumeration produced duplicate carriers")
    for word, runs in lhs_pairs:
        elem = _witness_elem(base, cell, runs)
        if not is_simplified(elem, base, cell):
            raise AssertionError(f"witness for {word} is not simplified")
        realized = realize(elem, pushout, cell.id)
        if realized.carrier() != word:
            raise AssertionError(
                f"witness realization carrier {realized.carrier()} != {word}")
    rhs = sorted(set(
        word
        for a, b in product(pushout.states, repeat=2)
        for word in pushout.enumerate_carriers(a, b, bound)))
    return {
        "cell": cell.id,
        "bound": bound,
        "lhs_carriers": [list(w) for w in lhs],
        "rhs_carriers": [list(w) for w in rhs],
        "bijection": lhs == rhs,
    }


# ---------------------------------------------------------------------------
# JSON encoding


def obj_to_json(obj: ReedyObj) -> dict:
    return {"u": obj.u, "v": obj.v,
            "triples": [[a, e, b] for a, e, b in obj.triples]}


def obj_from_json(data) -> ReedyObj:
    try:
        return make_obj(data["u"], data["v"], data["triples"])
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed index object: {exc}") from exc


def elem_to_json(elem: ReedyElem) -> dict:
    entries = []
    for entry in elem.entries:
        if isinstance(entry, APath):
            entries.append({"path": normal_path_to_json(entry.path)})
        elif isinstance(entry, InjPath):
            entries.append({"inj": normal_path_to_json(entry.path)})
        else:
            entries.append({"cellpath": {
                "z": [format_fraction(x) for x in entry.z],
                "chi": entry.chi.to_json()}})
    out = obj_to_json(elem.obj)
    out["entries"] = entries
    return out


def elem_from_json(data, base: Complex) -> ReedyElem:
    obj = obj_from_json(data)
    entries = []
    try:
        raw_entries = data["entries"]
    except (KeyError, TypeError) as exc:
        raise BadInputError(f"malformed element: {exc}") from exc
    for raw in raw_entries:
        if not isinstance(raw, dict) or len(raw) != 1:
            raise BadInputError(f"malformed entry: {raw!r}")
        kind, body = next(iter(raw.items()))
        if kind == "path":
            entries.append(APath(normal_path_from_json(body, base)))
        elif kind == "inj":
            entries.append(InjPath(normal_path_from_json(body, base)))
        elif kind == "cellpath":
            try:
                entries.append(CellPath(
                    tuple(parse_fraction(x) for x in body["z"]),
                    pl_from_json(body["chi"])))
            except (KeyError, TypeError) as exc:
                raise BadInputError(f"malformed cell path: {exc}") from exc
        else:
            raise BadInputError(f"unknown entry kind {kind!r}")
    return make_elem(obj, entries, base)
