"""Predicates on finite modules: atoms, socle, largeness, and friends.

All functions are pure with respect to their immutable inputs; per-module
answers are memoized on the module instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modules import (
    _UNSET,
    FiniteModule,
    MismatchedModuleError,
    Submodule,
    annihilator_in_module,
    annihilator_in_ring,
)

__all__ = [
    "PredicateReport",
    "comultiplication_witness",
    "is_cocyclic",
    "is_comultiplication",
    "is_finitely_cogenerated",
    "is_large",
    "is_second",
    "is_uniform",
    "minimal_submodules",
    "predicate_report",
    "second_submodules",
    "socle",
]


def minimal_submodules(module: FiniteModule) -> tuple[Submodule, ...]:
    """The atoms of the submodule lattice: nonzero submodules whose only
    proper submodule is zero.  Empty only for the zero module."""
    if module._minimals is not None:
        return module._minimals
    nonzero = [s for s in module.submodules() if not s.is_zero]
    atoms = tuple(
        s
        for s in nonzero
        if not any(t.order < s.order and t.element_set < s.element_set for t in nonzero)
    )
    module._minimals = atoms
    return atoms


def socle(module: FiniteModule) -> Submodule:
    """Join of all minimal submodules (zero for the zero module)."""
    if module._socle is None:
        out = module.zero_submodule()
        for atom in minimal_submodules(module):
            out = out.sum(atom)
        module._socle = out
    return module._socle


def is_large(module: FiniteModule, sub: Submodule) -> bool:
    """Whether the submodule meets every nonzero submodule nontrivially.

    Computes both the definitional answer and the socle criterion
    (``socle <= sub``; valid in any finite module because every nonzero
    submodule contains an atom) and insists they agree.
    """
    if sub.module != module:
        raise MismatchedModuleError("submodule does not belong to the module")
    cached = module._large.get(sub.elements)
    if cached is not None:
        return cached
    by_socle = socle(module).element_set <= sub.element_set
    definitional = True
    for other in module.submodules():
        if other.is_zero:
            continue
        if len(sub.element_set & other.element_set) == 1:  # only zero is shared
            definitional = False
            break
    if definitional != by_socle:
        raise RuntimeError(
            "internal error: definitional largeness and the socle criterion "
            f"disagree on {sub!r}"
        )
    module._large[sub.elements] = definitional
    return definitional


def is_uniform(module: FiniteModule) -> bool:
    """Whether every pair of nonzero submodules meets nontrivially.

    Vacuously true for the zero module (see ``PredicateReport.is_zero_module``
    for the degenerate flag).
    """
    nonzero = [s for s in module.submodules() if not s.is_zero]
    for i, a in enumerate(nonzero):
        for b in nonzero[i + 1 :]:
            if len(a.element_set & b.element_set) == 1:
                return False
    return True


def is_cocyclic(module: FiniteModule) -> bool:
    """Whether the socle is simple (an atom) and large."""
    soc = socle(module)
    if soc not in minimal_submodules(module):
        return False
    return is_large(module, soc)


def is_second(module: FiniteModule, sub: Submodule) -> bool:
    """Whether every ring scalar acts on the (nonzero) submodule either
    surjectively or as zero.

    Scalar action factors through the module exponent, so ranging over those
    residues covers the whole ring.
    """
    if sub.module != module:
        raise MismatchedModuleError("submodule does not belong to the module")
    if sub.is_zero:
        raise ValueError("the second-submodule predicate requires a nonzero submodule")
    zero_only = {module.zero}
    for a in range(module.exponent):
        image = {module.scale(a, x) for x in sub.elements}
        if image != sub.element_set and image != zero_only:
            return False
    return True


def second_submodules(module: FiniteModule) -> tuple[Submodule, ...]:
    """All second submodules, found by exhaustive scan."""
    return tuple(
        s for s in module.submodules() if not s.is_zero and is_second(module, s)
    )


def comultiplication_witness(module: FiniteModule) -> Submodule | None:
    """First submodule (in canonical order) violating the double-annihilator
    identity ``N == {m : e*m = 0}`` where e generates N's annihilator, or
    None when the identity holds throughout."""
    if module._comult_witness is not _UNSET:
        return module._comult_witness  # type: ignore[return-value]
    witness = None
    for sub in module.submodules():
        closure = annihilator_in_module(module, annihilator_in_ring(sub))
        if closure != sub:
            witness = sub
            break
    module._comult_witness = witness
    return witness


def is_comultiplication(module: FiniteModule) -> bool:
    """Whether every submodule equals the annihilator of its annihilator."""
    return comultiplication_witness(module) is None


def is_finitely_cogenerated(module: FiniteModule) -> bool:
    """Constant true: a finite module has finitely many submodules, so any
    family with zero intersection has a finite subfamily with zero
    intersection.  Kept explicit so the claim reports can show the clause."""
    return True


@dataclass(frozen=True, eq=False)
class PredicateReport:
    """Bundle of every module-level predicate, computed once."""

    module: FiniteModule
    minimal_submodules: tuple[Submodule, ...]
    socle: Submodule
    is_comultiplication: bool
    comultiplication_witness: Submodule | None
    is_cocyclic: bool
    is_uniform: bool
    is_finitely_cogenerated: bool
    is_zero_module: bool
    large: dict[Submodule, bool]


def predicate_report(module: FiniteModule) -> PredicateReport:
    return PredicateReport(
        module=module,
        minimal_submodules=minimal_submodules(module),
        socle=socle(module),
        is_comultiplication=is_comultiplication(module),
        comultiplication_witness=comultiplication_witness(module),
        is_cocyclic=is_cocyclic(module),
        is_uniform=is_uniform(module),
        is_finitely_cogenerated=is_finitely_cogenerated(module),
        is_zero_module=module.order == 1,
        large={s: is_large(module, s) for s in module.submodules()},
    )
