"""Combinatorial diagrams of framed links in L(p,1).

A diagram records the arcs of the link (arc pieces running from one
undercrossing, or disk passage, to the next), the crossings between link
arcs, and the ordered list of strands piercing the disk bounded by the
surgery curve.

Crossing relation: ``under_out = under_in ▷ over`` for a positive crossing
and ``under_out = under_in ▷̄ over`` for a negative one. A strand ties the
arc ``in_arc`` that ends at the disk to the arc ``out_arc`` that leaves it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import product


class DiagramError(ValueError):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DiagramValidationError(DiagramError):
    pass


class ComponentOutOfRange(DiagramError, IndexError):
    pass


class ArcOutOfRange(DiagramError, IndexError):
    pass


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class Strand:
    in_arc: int
    out_arc: int
    eps: int


@dataclass(frozen=True)
class LensDiagram:
    p: int
    arc_count: int
    components: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...] = ()
    strands: tuple[Strand, ...] = ()

    @property
    def d(self) -> int:
        return len(self.strands)

    @property
    def m(self) -> int:
        return self.arc_count - self.d

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def arcs(self) -> range:
        return range(1, self.arc_count + 1)

    @property
    def is_affine(self) -> bool:
        return not self.strands

    def component_of(self, arc: int) -> int:
        for c, cycle in enumerate(self.components):
            if arc in cycle:
                return c
        raise ArcOutOfRange(f"arc {arc} is not in any component")

    def validate(self) -> "LensDiagram":
        validate_diagram(self)
        return self


def _terminators(D: LensDiagram):
    """Map arc -> list of ('crossing'|'strand', index) where the arc ends / begins."""
    ends = {a: [] for a in D.arcs}
    starts = {a: [] for a in D.arcs}
    for idx, c in enumerate(D.crossings):
        ends[c.under_in].append(("crossing", idx))
        starts[c.under_out].append(("crossing", idx))
    for idx, s in enumerate(D.strands):
        ends[s.in_arc].append(("strand", idx))
        starts[s.out_arc].append(("strand", idx))
    return ends, starts


def validate_diagram(D: LensDiagram) -> None:
    """Raise :class:`DiagramValidationError` naming the first violated invariant."""
    err = DiagramValidationError
    if D.p < 1:
        raise err(f"p must be >= 1, got {D.p}")
    if D.arc_count < 1:
        raise err("a diagram needs at least one arc")
    in_range = set(D.arcs)

    seen: dict[int, int] = {}
    for c, cycle in enumerate(D.components):
        if not cycle:
            raise err(f"component {c + 1} is empty")
        for a in cycle:
            if a not in in_range:
                raise err(f"component {c + 1} lists arc {a} outside 1..{D.arc_count}")
            if a in seen:
                raise err(f"arc {a} appears in more than one place in the component lists")
            seen[a] = c
    missing = in_range - set(seen)
    if missing:
        raise err(f"arcs {sorted(missing)} belong to no component")

    for i, x in enumerate(D.crossings, 1):
        if x.sign not in (1, -1):
            raise err(f"crossing {i}: sign must be +1 or -1")
        for a in (x.over, x.under_in, x.under_out):
            if a not in in_range:
                raise err(f"crossing {i}: arc {a} outside 1..{D.arc_count}")
        if seen[x.under_in] != seen[x.under_out]:
            raise err(f"crossing {i}: under arcs {x.under_in}, {x.under_out} lie on different components")
    for i, s in enumerate(D.strands, 1):
        if s.eps not in (1, -1):
            raise err(f"strand {i}: eps must be +1 or -1")
        for a in (s.in_arc, s.out_arc):
            if a not in in_range:
                raise err(f"strand {i}: arc {a} outside 1..{D.arc_count}")
        if seen[s.in_arc] != seen[s.out_arc]:
            raise err(f"strand {i}: arcs {s.in_arc}, {s.out_arc} lie on different components")

    ends, starts = _terminators(D)
    for cycle in D.components:
        loop = len(cycle) == 1 and not ends[cycle[0]] and not starts[cycle[0]]
        if loop:
            continue
        for a in cycle:
            if len(ends[a]) != 1:
                raise err(f"arc {a} has {len(ends[a])} terminators, expected exactly one")
            if len(starts[a]) != 1:
                raise err(f"arc {a} has {len(starts[a])} originators, expected exactly one")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if ends[a] != starts[b]:
                raise err(f"arcs {a} and {b} are consecutive in a component but do not meet")


# -- text format -----------------------------------------------------------

_KV = re.compile(r"^(\w+)=([+-]?\d+)$")


def parse_diagram(text: str) -> LensDiagram:
    p = arcs = None
    comps: dict[int, tuple[int, ...]] = {}
    crossings, strands = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "p":
                p = int(rest)
            elif head == "arcs":
                arcs = int(rest)
            elif head == "component":
                label, sep, body = rest.partition(":")
                if not sep:
                    raise DiagramSyntaxError(lineno, "expected 'component <id>: <arcs>'")
                cid = int(label)
                if cid in comps:
                    raise DiagramSyntaxError(lineno, f"duplicate component {cid}")
                comps[cid] = tuple(int(t) for t in body.split())
            elif head == "crossing":
                toks = rest.split()
                if not toks or toks[0] not in ("+", "-"):
                    raise DiagramSyntaxError(lineno, "crossing sign must be + or -")
                kv = _keyvals(lineno, toks[1:], {"over", "in", "out"})
                crossings.append(Crossing(1 if toks[0] == "+" else -1, kv["over"], kv["in"], kv["out"]))
            elif head == "strand":
                kv = _keyvals(lineno, rest.split(), {"in", "out", "eps"})
                strands.append(Strand(kv["in"], kv["out"], kv["eps"]))
            else:
                raise DiagramSyntaxError(lineno, f"unknown keyword {head!r}")
        except ValueError as exc:
            if isinstance(exc, DiagramSyntaxError):
                raise
            raise DiagramSyntaxError(lineno, str(exc)) from None
    if p is None:
        raise DiagramSyntaxError(0, "missing 'p' line")
    if arcs is None:
        raise DiagramSyntaxError(0, "missing 'arcs' line")
    if not comps:
        raise DiagramSyntaxError(0, "no components")
    D = LensDiagram(
        p=p,
        arc_count=arcs,
        components=tuple(comps[k] for k in sorted(comps)),
        crossings=tuple(crossings),
        strands=tuple(strands),
    )
    validate_diagram(D)
    return D


def _keyvals(lineno, toks, keys):
    out = {}
    for tok in toks:
        m = _KV.match(tok)
        if not m or m.group(1) not in keys:
            raise DiagramSyntaxError(lineno, f"bad field {tok!r}")
        out[m.group(1)] = int(m.group(2))
    if set(out) != keys:
        raise DiagramSyntaxError(lineno, f"expected fields {sorted(keys)}")
    return out


def serialize_diagram(D: LensDiagram) -> str:
    lines = [f"p {D.p}", f"arcs {D.arc_count}"]
    for c, cycle in enumerate(D.components, 1):
        lines.append(f"component {c}: " + " ".join(map(str, cycle)))
    for x in D.crossings:
        sign = "+" if x.sign == 1 else "-"
        lines.append(f"crossing {sign} over={x.over} in={x.under_in} out={x.under_out}")
    for s in D.strands:
        eps = "+1" if s.eps == 1 else "-1"
        lines.append(f"strand in={s.in_arc} out={s.out_arc} eps={eps}")
    return "\n".join(lines) + "\n"


# -- framing and moves -----------------------------------------------------


def writhe_vector(D: LensDiagram) -> tuple[int, ...]:
    """Per-component sum of signs of self-crossings."""
    w = [0] * D.n
    for x in D.crossings:
        c = D.component_of(x.under_in)
        if D.component_of(x.over) == c:
            w[c] += x.sign
    return tuple(w)


def _split_at_terminator(D: LensDiagram, arc: int, new_pieces: int):
    """Cut ``arc`` just before its terminator into ``new_pieces`` extra arcs.

    Returns (crossings, strands, components, piece ids). The last piece takes
    over the old terminator. For a closed one-arc loop there is no terminator,
    so the last piece is the loop arc itself.
    """
    ends, _ = _terminators(D)
    comp = D.component_of(arc)
    fresh = list(range(D.arc_count + 1, D.arc_count + 1 + new_pieces))
    crossings = list(D.crossings)
    strands = list(D.strands)
    if not ends[arc]:
        pieces = fresh[:-1] + [arc]
        fresh = fresh[:-1]
    else:
        pieces = fresh
        kind, idx = ends[arc][0]
        last = pieces[-1]
        if kind == "crossing":
            crossings[idx] = replace(crossings[idx], under_in=last)
        else:
            strands[idx] = replace(strands[idx], in_arc=last)
    cycle = list(D.components[comp])
    pos = cycle.index(arc)
    cycle[pos + 1:pos + 1] = fresh
    components = list(D.components)
    components[comp] = tuple(cycle)
    return crossings, strands, tuple(components), pieces, len(fresh)


def add_positive_kink(D: LensDiagram, component_index: int) -> LensDiagram:
    """Add a positive curl at the end of the component's lowest-numbered arc.

    ``component_index`` is 0-based. The curl passes over itself on the
    incoming arc ``a`` and continues as ``b = a ▷ a``.
    """
    if not 0 <= component_index < D.n:
        raise ComponentOutOfRange(f"component {component_index} not in 0..{D.n - 1}")
    a = min(D.components[component_index])
    crossings, strands, comps, pieces, added = _split_at_terminator(D, a, 1)
    crossings.append(Crossing(1, a, a, pieces[0]))
    return LensDiagram(D.p, D.arc_count + added, comps, tuple(crossings), tuple(strands))


def apply_omega2(D: LensDiagram, moving_arc: int, over_arc: int) -> LensDiagram:
    """Push ``over_arc`` across the end of ``moving_arc`` creating two cancelling crossings."""
    for a in (moving_arc, over_arc):
        if a not in D.arcs:
            raise ArcOutOfRange(f"arc {a} not in 1..{D.arc_count}")
    crossings, strands, comps, pieces, added = _split_at_terminator(D, moving_arc, 2)
    u, v = pieces
    crossings.append(Crossing(1, over_arc, moving_arc, u))
    crossings.append(Crossing(-1, over_arc, u, v))
    return LensDiagram(D.p, D.arc_count + added, comps, tuple(crossings), tuple(strands))


def mirror_diagram(D: LensDiagram) -> LensDiagram:
    """Flip every crossing sign, keeping arcs and strands."""
    return replace(D, crossings=tuple(replace(x, sign=-x.sign) for x in D.crossings))


def framing_representatives(D: LensDiagram, N: int) -> list[tuple[tuple[int, ...], LensDiagram]]:
    """One diagram per writhe class in (Z_N)^n, labels in lexicographic order."""
    if N < 1:
        raise ValueError("N must be >= 1")
    base = writhe_vector(D)
    out = []
    for w in product(range(N), repeat=D.n):
        E = D
        for c in range(D.n):
            for _ in range((w[c] - base[c]) % N):
                E = add_positive_kink(E, c)
        out.append((w, E))
    return out


def diagram_from_events(p: int, components, signs, eps=None) -> LensDiagram:
    """Build a diagram from the sequence of events met while walking each component.

    Each component is a sequence of tokens ``"O<c>"`` (pass over crossing c),
    ``"U<c>"`` (pass under crossing c) or ``"D<i>"`` (pass through the disk as
    strand i). ``signs[c]`` is the sign of crossing c and ``eps[i]`` the sign of
    strand i; strands are listed in increasing ``i``.
    """
    eps = eps or {}
    tokens = [[(t[0], int(t[1:])) for t in comp] for comp in components]
    arc_of: dict[tuple[str, int], int] = {}  # over-passage -> arc containing it
    ends: dict[tuple[str, int], tuple[int, int]] = {}  # terminating event -> (arc in, arc out)
    comps = []
    next_arc = 1
    for comp in tokens:
        stops = [i for i, (kind, _) in enumerate(comp) if kind in "UD"]
        if not stops:
            for ev in comp:
                arc_of[ev] = next_arc
            comps.append((next_arc,))
            next_arc += 1
            continue
        start = stops[-1] + 1
        walk = comp[start:] + comp[:start]  # begins just after a terminating event
        ids = []
        current = next_arc
        ids.append(current)
        for pos, ev in enumerate(walk):
            if ev[0] == "O":
                arc_of[ev] = current
            else:
                following = next_arc + len(ids) if pos < len(walk) - 1 else ids[0]
                ends[ev] = (current, following)
                if pos < len(walk) - 1:
                    ids.append(following)
                current = following
        comps.append(tuple(ids))
        next_arc += len(ids)
    crossings = []
    for c in sorted(signs):
        under_in, under_out = ends[("U", c)]
        crossings.append(Crossing(signs[c], arc_of[("O", c)], under_in, under_out))
    strands = []
    for i in sorted(k for kind, k in ends if kind == "D"):
        a, b = ends[("D", i)]
        strands.append(Strand(a, b, eps.get(i, 1)))
    D = LensDiagram(p, next_arc - 1, tuple(comps), tuple(crossings), tuple(strands))
    validate_diagram(D)
    return D
