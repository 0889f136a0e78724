"""Enumeration of homomorphisms from the fundamental rack of a lens-space diagram to a finite rack.

A homomorphism is a p-tuple of level colorings ``(f_0, ..., f_{p-1})`` where
``f_k[a - 1]`` is the color of generator ``(arc a, level k)``. The automorphism
``A`` shifts levels up by one; past the top level it wraps through the word
of strand colors ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .diagram import Crossing, LensDiagram
from .rack import RackTable, eval_word

ORACLE_BUDGET = 10**7
LEVEL_MODES = ("independent", "uniform")

Coloring = tuple[int, ...]


class SearchSpaceTooLarge(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Homomorphism:
    levels: tuple[Coloring, ...]

    @property
    def p(self) -> int:
        return len(self.levels)

    def flat(self) -> tuple[int, ...]:
        return tuple(c for level in self.levels for c in level)

    def __call__(self, arc: int, level: int) -> int:
        return self.levels[level][arc - 1]


def _levels(f) -> tuple[Coloring, ...]:
    return f.levels if isinstance(f, Homomorphism) else tuple(tuple(level) for level in f)


def _crossing_value(T: RackTable, x: Crossing, under_in: int, over: int) -> int:
    return T.op(under_in, over) if x.sign == 1 else T.inv_op(under_in, over)


def enumerate_level_colorings(D: LensDiagram, T: RackTable) -> list[Coloring]:
    """Colorings of the arcs satisfying every crossing relation, sorted."""
    A = D.arc_count
    by_arc: dict[int, list[Crossing]] = {a: [] for a in D.arcs}
    for x in D.crossings:
        for a in {x.over, x.under_in, x.under_out}:
            by_arc[a].append(x)
    out: list[Coloring] = []

    def propagate(color: list[int], arc: int) -> bool:
        queue = [arc]
        while queue:
            a = queue.pop()
            for x in by_arc[a]:
                o, i, u = color[x.over], color[x.under_in], color[x.under_out]
                if not o:
                    continue
                if i and u:
                    if _crossing_value(T, x, i, o) != u:
                        return False
                elif i:
                    color[x.under_out] = _crossing_value(T, x, i, o)
                    queue.append(x.under_out)
                elif u:
                    color[x.under_in] = T.inv_op(u, o) if x.sign == 1 else T.op(u, o)
                    queue.append(x.under_in)
        return True

    def rec(color: list[int], arc: int):
        while arc <= A and color[arc]:
            arc += 1
        if arc > A:
            out.append(tuple(color[1:]))
            return
        for v in T.elements:
            trial = color.copy()
            trial[arc] = v
            if propagate(trial, arc):
                rec(trial, arc + 1)

    rec([0] * (A + 1), 1)
    out.sort()
    return out


def _wrap_word(D: LensDiagram, level: Coloring) -> list[tuple[int, int]]:
    """Operator word ``x_d^eps_d ... x_1^eps_1`` with the colors of one level."""
    return [(level[s.in_arc - 1], s.eps) for s in reversed(D.strands)]


def shift_value(D: LensDiagram, T: RackTable, f, n: int, arc: int, level: int) -> int:
    """Color of ``A^n (arc, level)`` for any ``n >= 0``.

    With ``level + n = q p + r`` this is ``F^q`` applied at level ``r``, where
    ``F`` right-multiplies by the strand word and is itself a rack automorphism.
    """
    levels = _levels(f)
    q, r = divmod(level + n, D.p)
    base = levels[r]
    if q == 0 or not D.strands:
        return base[arc - 1]
    values = list(base)
    for _ in range(q):
        word = _wrap_word(D, tuple(values))
        values = [eval_word(T, v, word) for v in values]
    return values[arc - 1]


def apply_A_power(D: LensDiagram, T: RackTable, f, k: int, generator: tuple[int, int]) -> int:
    """Color of ``A^k`` applied to ``(arc, level)`` for ``0 <= k, level <= p - 1``."""
    arc, level = generator
    if not (0 <= k < D.p and 0 <= level < D.p and 1 <= arc <= D.arc_count):
        raise IndexError(f"generator {generator} or power {k} out of range for p={D.p}")
    levels = _levels(f)
    if level + k <= D.p - 1:
        return levels[level + k][arc - 1]
    r = (level + k) % D.p
    return eval_word(T, levels[r][arc - 1], _wrap_word(D, levels[r]))


def kernel_partition(values: Sequence[int]) -> frozenset[frozenset[int]]:
    blocks: dict[int, set[int]] = {}
    for idx, v in enumerate(values):
        blocks.setdefault(v, set()).add(idx)
    return frozenset(frozenset(b) for b in blocks.values())


def _same_kernel(a: Sequence[int], b: Sequence[int]) -> bool:
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    for u, v in zip(a, b):
        if fwd.setdefault(u, v) != v or back.setdefault(v, u) != u:
            return False
    return True


def _chain_and_wrap(D: LensDiagram, T: RackTable, levels) -> bool:
    p = D.p
    for s in D.strands:
        for k in range(p - 1):
            if levels[k][s.out_arc - 1] != levels[k + 1][s.in_arc - 1]:
                return False
    if D.strands:
        word = _wrap_word(D, levels[0])
        for s in D.strands:
            if levels[p - 1][s.out_arc - 1] != eval_word(T, levels[0][s.in_arc - 1], word):
                return False
    return True


def _kernel_condition(D: LensDiagram, T: RackTable, levels) -> bool:
    gens = [(a, j) for j in range(D.p) for a in D.arcs]
    base = [levels[j][a - 1] for a, j in gens]
    for k in range(1, D.p):
        moved = [apply_A_power(D, T, levels, k, g) for g in gens]
        if not _same_kernel(base, moved):
            return False
    return True


def induced_action(D: LensDiagram, T: RackTable, f) -> dict[int, int] | None:
    """The map ``f(x) -> f(A x)`` on the image of the whole fundamental rack.

    Pairs ``(f(s), f(A s))`` over generators are closed under the rack
    operation and its inverse, taken componentwise. Returns ``None`` when the
    closure is not a bijection of the image, i.e. when the shift is not
    compatible with ``f``.
    """
    levels = _levels(f)
    pairs = {
        (levels[j][a - 1], shift_value(D, T, levels, 1, a, j))
        for j in range(D.p)
        for a in D.arcs
    }
    frontier = list(pairs)
    while frontier:
        new = []
        current = list(pairs)
        for u, u2 in frontier:
            for v, v2 in current:
                for cand in (
                    (T.op(u, v), T.op(u2, v2)),
                    (T.inv_op(u, v), T.inv_op(u2, v2)),
                    (T.op(v, u), T.op(v2, u2)),
                    (T.inv_op(v, u), T.inv_op(v2, u2)),
                ):
                    if cand not in pairs:
                        pairs.add(cand)
                        new.append(cand)
        frontier = new
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for u, u2 in pairs:
        if forward.setdefault(u, u2) != u2 or backward.setdefault(u2, u) != u:
            return None
    if forward.keys() != backward.keys():
        return None
    return forward


def check_kernel(D: LensDiagram, T: RackTable, f) -> bool:
    """Kernel preservation on generators only, for A^1..A^(p-1)."""
    return _kernel_condition(D, T, _levels(f))


def check_conditions(D: LensDiagram, T: RackTable, f) -> bool:
    """Level chaining, wrap-around, kernel preservation under A^1..A^(p-1),
    and a well-defined induced action on the full image.

    Each level is assumed to satisfy the crossing relations already.
    """
    levels = _levels(f)
    return (
        _chain_and_wrap(D, T, levels)
        and _kernel_condition(D, T, levels)
        and induced_action(D, T, levels) is not None
    )


def _check_mode(levels: str) -> None:
    if levels not in LEVEL_MODES:
        raise ValueError(f"levels must be one of {LEVEL_MODES}, got {levels!r}")


def enumerate_homomorphisms(D: LensDiagram, T: RackTable, levels: str = "independent") -> list[Homomorphism]:
    """All homomorphisms, sorted by flattened color tuple.

    ``levels="uniform"`` keeps only tuples whose levels all carry the same
    coloring and skips the kernel and induced-action checks. It is a
    reproduction convention for published tables, not the definition.
    """
    _check_mode(levels)
    colorings = enumerate_level_colorings(D, T)
    if levels == "uniform":
        return [Homomorphism((c,) * D.p) for c in colorings if _chain_and_wrap(D, T, [c] * D.p)]
    index: dict[tuple[int, ...], list[Coloring]] = {}
    for c in colorings:
        index.setdefault(tuple(c[s.in_arc - 1] for s in D.strands), []).append(c)
    out = []

    def rec(levels: list[Coloring]):
        if len(levels) == D.p:
            if check_conditions(D, T, levels):
                out.append(Homomorphism(tuple(levels)))
            return
        prev = levels[-1]
        key = tuple(prev[s.out_arc - 1] for s in D.strands)
        for c in index.get(key, ()):
            levels.append(c)
            rec(levels)
            levels.pop()

    for f0 in colorings:
        rec([f0])
    out.sort()
    return out


def count_homomorphisms(D: LensDiagram, T: RackTable, levels: str = "independent") -> int:
    return len(enumerate_homomorphisms(D, T, levels))


# -- brute-force oracle ----------------------------------------------------
#
# Elements of the fundamental rack are kept as terms: a generator
# ("g", arc, level) or ("op", left, right, eps). A acts on generators by the
# presentation and extends to terms as a rack automorphism.


def _oracle_A(D: LensDiagram, term):
    if term[0] == "op":
        return ("op", _oracle_A(D, term[1]), _oracle_A(D, term[2]), term[3])
    _, arc, level = term
    if level < D.p - 1:
        return ("g", arc, level + 1)
    out = ("g", arc, 0)
    for s in reversed(D.strands):
        out = ("op", out, ("g", s.in_arc, 0), s.eps)
    return out


def _oracle_eval(T: RackTable, f: dict, term) -> int:
    if term[0] == "g":
        return f[(term[1], term[2])]
    left = _oracle_eval(T, f, term[1])
    right = _oracle_eval(T, f, term[2])
    return T.op(left, right) if term[3] == 1 else T.inv_op(left, right)


def oracle_enumerate_homomorphisms(D: LensDiagram, T: RackTable, levels: str = "independent") -> list[Homomorphism]:
    """Try every map from generators to the rack and keep those meeting all conditions."""
    _check_mode(levels)
    gens = [(a, k) for k in range(D.p) for a in D.arcs]
    free = list(D.arcs) if levels == "uniform" else gens
    if T.order ** len(free) > ORACLE_BUDGET:
        raise SearchSpaceTooLarge(
            f"{T.order}^{len(free)} candidate maps exceeds the oracle budget of {ORACLE_BUDGET}"
        )
    images = {g: [("g",) + g] for g in gens}
    for g in gens:
        for _ in range(D.p - 1):
            images[g].append(_oracle_A(D, images[g][-1]))

    out = []
    for values in product(T.elements, repeat=len(free)):
        if levels == "uniform":
            f = {(a, k): values[a - 1] for a, k in gens}
        else:
            f = dict(zip(gens, values))
        ok = all(
            _oracle_eval(T, f, ("op", ("g", x.under_in, k), ("g", x.over, k), x.sign)) == f[(x.under_out, k)]
            for x in D.crossings
            for k in range(D.p)
        )
        # presentation relations: (out_i, k) = (in_i, k+1), (out_i, p-1) = F(in_i, 0)
        ok = ok and all(
            f[(s.out_arc, k)] == _oracle_eval(T, f, _oracle_A(D, ("g", s.in_arc, k)))
            for s in D.strands
            for k in range(D.p)
        )
        if ok and levels == "independent":
            for k in range(1, D.p):
                moved = {g: _oracle_eval(T, f, images[g][k]) for g in gens}
                if any((f[x] == f[y]) != (moved[x] == moved[y]) for x in gens for y in gens):
                    ok = False
                    break
        if ok and levels == "independent":
            shifted = {g: _oracle_eval(T, f, _oracle_A(D, ("g",) + g)) for g in gens}
            ok = _oracle_has_automorphism(T, f, shifted)
        if ok:
            out.append(Homomorphism(tuple(tuple(f[(a, k)] for a in D.arcs) for k in range(D.p))))
    out.sort()
    return out


def _oracle_has_automorphism(T: RackTable, f: dict, shifted: dict) -> bool:
    """Is there an automorphism of the subrack generated by f's values sending f(s) to f(A s)?"""
    image = set(f.values())
    grow = True
    while grow:
        grow = False
        for u in list(image):
            for v in list(image):
                for w in (T.op(u, v), T.inv_op(u, v)):
                    if w not in image:
                        image.add(w)
                        grow = True
    elems = sorted(image)
    for targets in permutations(elems):
        sigma = dict(zip(elems, targets))
        if any(sigma[f[g]] != shifted[g] for g in f):
            continue
        if all(sigma[T.op(u, v)] == T.op(sigma[u], sigma[v]) for u in elems for v in elems):
            return True
    return False
