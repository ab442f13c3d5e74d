"""Sampled invariant suites behind the CLI selftest command.

Each check draws reproducible random instances from a seed, exercises one
family of algebraic laws, and reports the case count with a pass flag.  The
rewrite-identity pair generator is also used by the acceptance test suite
with larger sample sizes.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .cellcomplex import Moore, NormComp, Repar, np_to_expr
from .mooreflow import chain_complex
from .reparam import (
    compose,
    decompose,
    identity,
    inverse,
    mu,
    pl_eval_inv,
    tensor,
)
from .sampling import (
    rand_composable_unit_paths,
    rand_nonidentity_pl,
    rand_normal_path,
    rand_partition,
    rand_pl,
)

IDENTITY_KINDS = (
    "block_absorb",
    "rescale",
    "normcomp_expand",
    "normcomp_repar",
    "chain_to_normcomp",
    "variable_length",
)


def _moore_chain(exprs):
    out = exprs[0]
    for e in exprs[1:]:
        out = Moore(out, e)
    return out


def _normcomp_chain(exprs):
    out = exprs[0]
    for e in exprs[1:]:
        out = NormComp(out, e)
    return out


def _scaled(expr, length):
    return Repar(expr, mu(length))


def _dyadic(n):
    """Block targets of the left-nested normalized concatenation: the first
    two blocks have length 2^-(n-1), then lengths double up to 1/2."""
    if n == 1:
        return [Fraction(1)]
    out = [Fraction(1, 2 ** (n - 1)), Fraction(1, 2 ** (n - 1))]
    out.extend(Fraction(1, 2 ** (n - i + 1)) for i in range(3, n + 1))
    return out


def identity_pair(rng: Random, cx, spine, kind):
    """Two expressions equal by one of the concatenation laws."""
    if kind == "block_absorb":
        n = rng.randrange(1, 5)
        gammas = rand_composable_unit_paths(rng, cx, spine, n)
        src_lens = rand_partition(rng, rng.choice([1, 2]), n)
        dst_lens = rand_partition(rng, rng.choice([1, Fraction(1, 2)]), n)
        phis = [rand_pl(rng, a, b) for a, b in zip(src_lens, dst_lens)]
        chain = _moore_chain([_scaled(g, ell)
                              for g, ell in zip(gammas, dst_lens)])
        lhs = Repar(chain, tensor(*phis))
        rhs = _moore_chain([Repar(_scaled(g, ell), phi)
                            for g, ell, phi in zip(gammas, dst_lens, phis)])
        return lhs, rhs
    if kind == "rescale":
        n = rng.randrange(1, 5)
        gammas = rand_composable_unit_paths(rng, cx, spine, n)
        lens = rand_partition(rng, 1, n)
        ell = rng.choice([Fraction(1, 2), Fraction(2), Fraction(3, 4)])
        chain = _moore_chain([_scaled(g, l) for g, l in zip(gammas, lens)])
        lhs = Repar(chain, mu(ell))
        rhs = _moore_chain([_scaled(g, l * ell)
                            for g, l in zip(gammas, lens)])
        return lhs, rhs
    if kind == "normcomp_expand":
        n = rng.randrange(2, 7)
        gammas = rand_composable_unit_paths(rng, cx, spine, n)
        lhs = _normcomp_chain(gammas)
        rhs = _moore_chain([_scaled(g, d)
                            for g, d in zip(gammas, _dyadic(n))])
        return lhs, rhs
    if kind == "normcomp_repar":
        n = rng.randrange(2, 7)
        gammas = rand_composable_unit_paths(rng, cx, spine, n)
        phi = rand_pl(rng, 1, 1)
        dyadic = _dyadic(n)
        cuts = []
        acc = Fraction(0)
        for d in dyadic:
            acc += d
            cuts.append(pl_eval_inv(phi, acc))
        lens = [b - a for a, b in zip([Fraction(0)] + cuts, cuts)]
        phis = decompose(phi, lens)
        lhs = Repar(_normcomp_chain(gammas), phi)
        rhs = _moore_chain([Repar(_scaled(g, d), p)
                            for g, d, p in zip(gammas, dyadic, phis)])
        return lhs, rhs
    if kind == "chain_to_normcomp":
        n = rng.randrange(2, 7)
        gammas = rand_composable_unit_paths(rng, cx, spine, n)
        lens = rand_partition(rng, 1, n)
        dyadic = _dyadic(n)
        phis = [rand_pl(rng, d, l) for d, l in zip(dyadic, lens)]
        chain = _moore_chain([_scaled(g, l) for g, l in zip(gammas, lens)])
        lhs = Repar(chain, tensor(*phis))
        rhs = _normcomp_chain([
            Repar(g, compose(compose(inverse(mu(d)), p), mu(l)))
            for g, d, l, p in zip(gammas, dyadic, lens, phis)])
        return lhs, rhs
    if kind == "variable_length":
        gammas = rand_composable_unit_paths(rng, cx, spine, 2)
        l1, l2 = rand_partition(rng, rng.choice([1, 2, Fraction(3, 2)]), 2)
        total = l1 + l2
        chain = Moore(_scaled(gammas[0], l1), _scaled(gammas[1], l2))
        lhs = Repar(chain, inverse(mu(total)))
        psi1, psi2 = decompose(inverse(mu(total)), [l1 / total, l2 / total])
        rhs = Moore(Repar(_scaled(gammas[0], l1), psi1),
                    Repar(_scaled(gammas[1], l2), psi2))
        return lhs, rhs
    raise ValueError(f"unknown identity kind {kind!r}")


# ---------------------------------------------------------------------------
# sampled suites


def check_reparam_laws(rng: Random, cases: int) -> dict:
    ok = True
    for _ in range(cases):
        phi = rand_pl(rng, 1, rng.choice([1, 2, Fraction(1, 2)]))
        psi = rand_pl(rng, phi.dst_len, 1)
        chi = rand_pl(rng, 1, Fraction(3, 2))
        ok = ok and compose(phi, inverse(phi)) == identity(phi.src_len)
        ok = ok and (compose(compose(phi, psi), chi)
                     == compose(phi, compose(psi, chi)))
        lens = rand_partition(rng, phi.src_len, rng.randrange(1, 4))
        ok = ok and tensor(*decompose(phi, lens)) == phi
    return {"name": "reparam_laws", "cases": cases, "ok": ok}


def check_identity_pairs(rng: Random, cases: int) -> dict:
    cx = chain_complex(6)
    spine = [f"g{i}" for i in range(1, 7)]
    ok = True
    for i in range(cases):
        kind = IDENTITY_KINDS[i % len(IDENTITY_KINDS)]
        lhs, rhs = identity_pair(rng, cx, spine, kind)
        ok = ok and cx.normalize(lhs) == cx.normalize(rhs)
    return {"name": "normal_form_pairs", "cases": cases, "ok": ok}


def check_rigidity(rng: Random, cases: int) -> dict:
    cx = chain_complex(4)
    spine = [f"g{i}" for i in range(1, 5)]
    ok = True
    for _ in range(cases):
        hops = sorted(rng.sample(range(5), 2))
        carrier = tuple(spine[hops[0]:hops[1]])
        np = rand_normal_path(rng, cx, carrier, total=1)
        phi = rand_nonidentity_pl(rng)
        moved = cx.normalize(Repar(np_to_expr(np), phi))
        ok = ok and moved != np
    return {"name": "rigidity", "cases": cases, "ok": ok}


def check_elem_normalization(rng: Random, cases: int) -> dict:
    from .cellcomplex import Cell, ComplexDesc, Step, validate
    from .reedy import (
        APath,
        CellPath,
        is_simplified,
        make_elem,
        make_obj,
        normalize_elem,
    )
    from .sampling import rand_fraction

    base = validate(ComplexDesc(("0", "1"), (
        Cell("e", 0, "0", "1"),
        Cell("l", 0, "1", "1"),
        Cell("f", 0, "1", "0"),
    )))
    cell = Cell("g", 1, "1", "1",
                boundary_minus=Step("l", (), identity(1)),
                boundary_plus=Step("l", (), identity(1)))
    ok = True
    for _ in range(cases):
        n = rng.randrange(1, 5)
        triples = []
        entries = []
        for _ in range(n):
            if rng.random() < 0.5:
                triples.append(("1", 1, "1"))
                z = (rng.choice([rand_fraction(rng, -1, 1),
                                 Fraction(-1), Fraction(1)]),)
                entries.append(CellPath(z, rand_pl(rng, 1, 1)))
            else:
                triples.append(("1", 0, "1"))
                entries.append(APath(rand_normal_path(rng, base, ("l",))))
        elem = make_elem(make_obj("1", "1", triples), entries, base)
        nf = normalize_elem(elem, base, cell)
        ok = ok and is_simplified(nf, base, cell)
        ok = ok and normalize_elem(nf, base, cell) == nf
    return {"name": "elem_normalization", "cases": cases, "ok": ok}


def selftest_report(seed: int, scale: int = 1) -> dict:
    checks = [
        check_reparam_laws(Random(seed), 100 * scale),
        check_identity_pairs(Random(seed + 1), 60 * scale),
        check_rigidity(Random(seed + 2), 40 * scale),
        check_elem_normalization(Random(seed + 3), 30 * scale),
    ]
    return {"seed": seed,
            "checks": checks,
            "ok": all(c["ok"] for c in checks)}
