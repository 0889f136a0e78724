"""Counting invariants of framed links in L(p,1) and their polynomial enhancements."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .diagram import LensDiagram, framing_representatives
from .rack import Permutation, RackTable, eval_word
from .solver import (
    Homomorphism,
    _wrap_word,
    enumerate_homomorphisms,
    induced_action,
    oracle_enumerate_homomorphisms,
)


class ClosureConflict(RuntimeError):
    """The level-shift action is not well defined on the image of a homomorphism."""


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial with positive integer coefficients.

    ``terms`` maps exponent tuples (one entry per name in ``variables``) to
    coefficients; zero coefficients are never stored.
    """

    variables: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_dict(cls, variables, terms: dict) -> "Poly":
        variables = tuple(variables)
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent {exps} does not match variables {variables}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        return cls(variables, tuple(sorted((e, c) for e, c in clean.items() if c)))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def specialize(self, *names: str) -> "Poly":
        """Set the named variables to 1."""
        keep = [i for i, v in enumerate(self.variables) if v not in names]
        out: Counter = Counter()
        for exps, coeff in self.terms:
            out[tuple(exps[i] for i in keep)] += coeff
        return Poly.from_dict([self.variables[i] for i in keep], out)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(poly: Poly) -> str:
    """Canonical text: ``12 + 10*q1``, ``4 + 12*x^2``; the zero polynomial is ``0``."""
    if not poly.terms:
        return "0"
    parts = []
    for exps, coeff in poly.terms:
        factors = []
        for name, e in zip(poly.variables, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(coeff)] + factors))
    return " + ".join(parts)


def format_table(poly: Poly) -> str:
    """Machine-readable form: a header naming the variables, then ``exponents<TAB>coefficient``."""
    lines = ["# " + " ".join(poly.variables) if poly.variables else "#"]
    for exps, coeff in poly.terms:
        lines.append(" ".join(map(str, exps)) + f"\t{coeff}")
    return "\n".join(lines) + "\n"


def _q_names(n: int) -> tuple[str, ...]:
    return tuple(f"q{i}" for i in range(1, n + 1))


def generated_subrack(T: RackTable, values) -> set[int]:
    image = set(values)
    frontier = list(image)
    while frontier:
        new = []
        for u in frontier:
            for v in list(image):
                for w in (T.op(u, v), T.inv_op(u, v), T.op(v, u), T.inv_op(v, u)):
                    if w not in image:
                        image.add(w)
                        new.append(w)
        frontier = new
    return image


def symmetry_permutation(D: LensDiagram, T: RackTable, f: Homomorphism, levels: str = "independent") -> Permutation:
    """Permutation of the rack induced by the level shift through ``f``.

    Seeds the pairs ``(f(s), f(A s))`` over generators, closes them under the
    rack operation and its inverse applied componentwise, and fixes every
    element outside the resulting domain.

    With ``levels="uniform"`` the permutation is right multiplication by the
    strand word on the subrack generated by the image.
    """
    if levels == "uniform":
        word = _wrap_word(D, f.levels[0])
        image = generated_subrack(T, f.levels[0])
        return Permutation(tuple(eval_word(T, u, word) if u in image else u for u in T.elements))
    forward = induced_action(D, T, f)
    if forward is None:
        raise ClosureConflict(f"level shift is not well defined on the image of {f.levels}")
    return Permutation(tuple(forward.get(i, i) for i in T.elements))


def _framed_homs(D: LensDiagram, T: RackTable, levels: str, oracle: bool = False):
    enumerate_ = oracle_enumerate_homomorphisms if oracle else enumerate_homomorphisms
    for w, E in framing_representatives(D, T.rank):
        yield w, E, enumerate_(E, T, levels)


def integral_invariant(D: LensDiagram, T: RackTable, levels: str = "independent", oracle: bool = False) -> int:
    return sum(len(homs) for _, _, homs in _framed_homs(D, T, levels, oracle))


def writhe_enhanced_invariant(D: LensDiagram, T: RackTable, levels: str = "independent", oracle: bool = False) -> Poly:
    return Poly.from_dict(_q_names(D.n), {w: len(homs) for w, _, homs in _framed_homs(D, T, levels, oracle)})


def writhe_symmetry_invariant(D: LensDiagram, T: RackTable, levels: str = "independent", oracle: bool = False) -> Poly:
    """Terms ``x^(ord(sigma_f) - 1) * q^w`` over framings ``w`` and homomorphisms ``f``."""
    terms: Counter = Counter()
    for w, E, homs in _framed_homs(D, T, levels, oracle):
        for f in homs:
            terms[(symmetry_permutation(E, T, f, levels).order() - 1,) + w] += 1
    return Poly.from_dict(("x",) + _q_names(D.n), terms)


def symmetry_invariant(D: LensDiagram, T: RackTable, levels: str = "independent", oracle: bool = False) -> Poly:
    return writhe_symmetry_invariant(D, T, levels, oracle).specialize(*_q_names(D.n))


def all_invariants(D: LensDiagram, T: RackTable, levels: str = "independent", oracle: bool = False) -> dict[str, object]:
    """The four invariants from a single pass over framings."""
    wsym = writhe_symmetry_invariant(D, T, levels, oracle)
    qs = _q_names(D.n)
    return {
        "phi_Z": wsym.total(),
        "phi_W": wsym.specialize("x"),
        "phi_Sym": wsym.specialize(*qs),
        "phi_WSym": wsym,
    }
