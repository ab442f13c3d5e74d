"""Fixture complexes shared by the test modules and the CLI corpus."""

from fractions import Fraction as F

from dipath.cellcomplex import Cell, Complex, ComplexDesc, NormComp, Step, validate
from dipath.reparam import identity


def estep(cell_id, chi=None):
    """A unit-speed step over an edge cell."""
    return Step(cell_id, (), chi if chi is not None else identity(1))


def gstep(cell_id, z, chi=None):
    """A step through a globe cell at disk point z."""
    return Step(cell_id, (F(z),), chi if chi is not None else identity(1))


def edge(cid, src, dst):
    return Cell(cid, 0, src, dst)


def globe(cid, src, dst, minus, plus):
    return Cell(cid, 1, src, dst, boundary_minus=minus, boundary_plus=plus)


def segment_desc():
    return ComplexDesc(("0", "1"), (edge("e", "0", "1"),))


def parallel_desc(n=2):
    return ComplexDesc(("0", "1"),
                       tuple(edge(f"e{i}", "0", "1") for i in range(1, n + 1)))


def globe_d1_desc():
    return ComplexDesc(("0", "1"), (
        edge("em", "0", "1"),
        edge("ep", "0", "1"),
        globe("g", "0", "1", estep("em"), estep("ep")),
    ))


def square_desc(filled=True):
    cells = [
        edge("a", "bot", "p"),
        edge("b", "p", "top"),
        edge("c", "bot", "q"),
        edge("d", "q", "top"),
    ]
    if filled:
        cells.append(globe("sq", "bot", "top",
                           NormComp(estep("a"), estep("b")),
                           NormComp(estep("c"), estep("d"))))
    return ComplexDesc(("bot", "p", "q", "top"), tuple(cells))


def chain_desc(n):
    states = tuple(f"s{i}" for i in range(n + 1))
    cells = tuple(edge(f"e{i}", f"s{i-1}", f"s{i}") for i in range(1, n + 1))
    return ComplexDesc(states, cells)


def triangle_desc():
    return ComplexDesc(("al", "be", "ga"), (
        edge("a", "al", "be"),
        edge("b", "be", "ga"),
        edge("e", "al", "ga"),
        globe("t", "al", "ga", NormComp(estep("a"), estep("b")), estep("e")),
    ))


def loop_desc():
    return ComplexDesc(("0", "1"), (
        edge("e", "0", "1"),
        edge("l", "0", "0"),
    ))


def loop_heavy_desc():
    return ComplexDesc(("0", "1"), (
        edge("e", "0", "1"),
        edge("l", "1", "1"),
        edge("f", "1", "0"),
    ))


def diamond_desc():
    return ComplexDesc(("s", "x", "y", "t"), (
        edge("a", "s", "x"),
        edge("b", "x", "t"),
        edge("c", "s", "y"),
        edge("d", "y", "t"),
    ))


def double_globe_desc():
    return ComplexDesc(("a", "b", "c"), (
        edge("e1m", "a", "b"),
        edge("e1p", "a", "b"),
        edge("e2m", "b", "c"),
        edge("e2p", "b", "c"),
        globe("g1", "a", "b", estep("e1m"), estep("e1p")),
        globe("g2", "b", "c", estep("e2m"), estep("e2p")),
    ))


def grid21_desc():
    """Two squares side by side sharing the middle vertical edge."""
    return ComplexDesc(("A", "B", "C", "D", "E", "Fs"), (
        edge("a", "A", "B"),
        edge("b", "B", "C"),
        edge("d", "D", "E"),
        edge("ee", "E", "Fs"),
        edge("u", "A", "D"),
        edge("v", "B", "E"),
        edge("w", "C", "Fs"),
        globe("s1", "A", "E",
              NormComp(estep("a"), estep("v")),
              NormComp(estep("u"), estep("d"))),
        globe("s2", "B", "Fs",
              NormComp(estep("b"), estep("w")),
              NormComp(estep("v"), estep("ee"))),
    ))


def stacked_globe_desc():
    """Three parallel edges with two globes stacked between them."""
    return ComplexDesc(("0", "1"), (
        edge("e1", "0", "1"),
        edge("e2", "0", "1"),
        edge("e3", "0", "1"),
        globe("g12", "0", "1", estep("e1"), estep("e2")),
        globe("g23", "0", "1", estep("e2"), estep("e3")),
    ))


CORPUS = {
    "segment": segment_desc(),
    "parallel2": parallel_desc(2),
    "parallel3": parallel_desc(3),
    "globe_d1": globe_d1_desc(),
    "square": square_desc(True),
    "square_open": square_desc(False),
    "chain3": chain_desc(3),
    "triangle": triangle_desc(),
    "loop": loop_desc(),
    "loop_heavy": loop_heavy_desc(),
    "diamond": diamond_desc(),
    "double_globe": double_globe_desc(),
    "grid21": grid21_desc(),
    "stacked_globe": stacked_globe_desc(),
}


def build(name) -> Complex:
    return validate(CORPUS[name])
