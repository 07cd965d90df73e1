"""Finite modules over Z or Z/n: element universes, submodules, lattice ops.

A module is a finite abelian group ``Z_{d_1} + ... + Z_{d_k}`` together with
the scalar action of its ring (the integers, or the integers mod n when every
element order divides n).  Elements are coordinate tuples; submodules carry a
canonical sorted element tuple, so equality and hashing are representation
independent.  Everything is exact integer arithmetic, and every value is
immutable after construction (lazily computed attributes are memoized, which
is a benign race under concurrent readers).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm, prod

Element = tuple[int, ...]

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "Element",
    "FiniteModule",
    "Ideal",
    "IncompatibleRingError",
    "MismatchedModuleError",
    "QuotientModule",
    "RingSpec",
    "SizeCapError",
    "Submodule",
    "annihilator_in_module",
    "annihilator_in_ring",
    "build_module",
    "divisors",
    "enumerate_submodules",
    "format_module_spec",
    "generate_submodule",
    "parse_module_spec",
    "quotient_module",
]


class IncompatibleRingError(ValueError):
    """Module exponent does not divide the modulus of the acting ring."""


class SizeCapError(RuntimeError):
    """A configured size cap (elements or submodules) was exceeded."""


class MismatchedModuleError(ValueError):
    """Binary operation applied to submodules of different parent modules."""


@dataclass(frozen=True)
class Caps:
    """Resource limits.  Exceeding one raises :class:`SizeCapError` loudly
    rather than grinding through an exploding lattice."""

    max_elements: int = 10_000
    max_submodules: int = 100_000


DEFAULT_CAPS = Caps()


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    small, big = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                big.append(n // d)
        d += 1
    return small + big[::-1]


@dataclass(frozen=True)
class RingSpec:
    """The acting ring: the integers when ``modulus == 0``, else Z/modulus."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(
                f"ring modulus must be 0 (the integers) or >= 2, got {self.modulus}"
            )

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls(0)

    @classmethod
    def integers_mod(cls, n: int) -> "RingSpec":
        return cls(n)

    @property
    def is_integers(self) -> bool:
        return self.modulus == 0

    def ideal(self, generator: int) -> "Ideal":
        """The principal ideal (generator), canonicalized.

        Over Z the canonical generator is ``abs(generator)``.  Over Z/n it is
        ``gcd(generator, n)`` which lands in the divisors of n; note this
        sends 0 to n, so the zero ideal of Z/n is represented by n itself.
        """
        if self.is_integers:
            return Ideal(self, abs(generator))
        return Ideal(self, gcd(generator % self.modulus, self.modulus))

    def __str__(self) -> str:
        return "Z" if self.is_integers else f"Z/{self.modulus}"


@dataclass(frozen=True)
class Ideal:
    """A principal ideal of the acting ring, by its canonical generator.

    Generator 1 is the unit ideal in both rings; the zero ideal is generator 0
    over Z and generator n over Z/n.  Use :meth:`RingSpec.ideal` to build one
    from an arbitrary generator.
    """

    ring: RingSpec
    generator: int

    def __post_init__(self) -> None:
        if self.ring.is_integers:
            if self.generator < 0:
                raise ValueError("ideal generator over Z must be nonnegative")
        else:
            n = self.ring.modulus
            if not (1 <= self.generator <= n and n % self.generator == 0):
                raise ValueError(
                    f"ideal generator over Z/{n} must be a positive divisor of {n}"
                )

    @property
    def is_zero(self) -> bool:
        if self.ring.is_integers:
            return self.generator == 0
        return self.generator == self.ring.modulus

    @property
    def is_unit(self) -> bool:
        return self.generator == 1

    def __str__(self) -> str:
        if self.ring.is_integers:
            return f"({self.generator})Z"
        return f"({self.generator}) in Z/{self.ring.modulus}"


def parse_module_spec(text: str) -> tuple[RingSpec, list[int]]:
    """Parse a module spec string, grammar ``RING ':' ORDERS``.

    RING is ``Z`` or ``Z/<n>``; ORDERS is a comma-separated list of integers
    >= 2.  Examples: ``Z:2,4``, ``Z:30``, ``Z/12:2,4``.
    """
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"bad module spec {text!r}: expected RING:ORDERS")
    ring_part, _, orders_part = text.partition(":")
    ring_part = ring_part.strip()
    if ring_part == "Z":
        ring = RingSpec.integers()
    elif ring_part.startswith("Z/"):
        try:
            n = int(ring_part[2:])
        except ValueError:
            raise ValueError(f"bad ring {ring_part!r} in module spec") from None
        if n < 2:
            raise ValueError(f"bad ring modulus {n} in module spec")
        ring = RingSpec.integers_mod(n)
    else:
        raise ValueError(f"bad ring {ring_part!r} in module spec")
    try:
        orders = [int(tok) for tok in orders_part.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad orders {orders_part!r} in module spec") from None
    if not orders:
        raise ValueError(f"module spec {text!r} lists no cyclic orders")
    if any(d < 2 for d in orders):
        raise ValueError("cyclic orders in a module spec must all be >= 2")
    return ring, orders


def format_module_spec(ring: RingSpec, cyclic_orders) -> str:
    return f"{ring}:{','.join(str(d) for d in cyclic_orders)}"


class FiniteModule:
    """A finite module with a materialized, lexicographically ordered element
    universe.

    Public attributes: ``ring``, ``cyclic_orders``, ``order``, ``exponent``,
    ``rank``, ``zero``, ``elements``, ``caps``.  Submodule enumeration and
    largeness answers are memoized per instance.
    """

    def __init__(self, ring: RingSpec, cyclic_orders, caps: Caps = DEFAULT_CAPS):
        orders = tuple(int(d) for d in cyclic_orders)
        if any(d < 2 for d in orders):
            raise ValueError("every cyclic order must be >= 2")
        order = prod(orders)
        exponent = lcm(*orders) if orders else 1
        if not ring.is_integers and ring.modulus % exponent != 0:
            raise IncompatibleRingError(
                f"module exponent {exponent} does not divide ring modulus {ring.modulus}"
            )
        if order > caps.max_elements:
            raise SizeCapError(
                f"module order {order} exceeds element cap {caps.max_elements}"
            )
        self.ring = ring
        self.cyclic_orders = orders
        self.order = order
        self.exponent = exponent
        self.rank = len(orders)
        self.caps = caps
        self.zero: Element = (0,) * self.rank
        self.elements: tuple[Element, ...] = tuple(
            itertools.product(*(range(d) for d in orders))
        )
        self._key = (ring.modulus, orders)
        self._interned: dict[tuple[Element, ...], Submodule] = {}
        self._submodules: tuple[Submodule, ...] | None = None
        self._minimals: tuple[Submodule, ...] | None = None
        self._socle: Submodule | None = None
        self._large: dict[tuple[Element, ...], bool] = {}
        self._comult_witness: object = _UNSET

    @cached_property
    def element_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    @property
    def spec_string(self) -> str:
        return format_module_spec(self.ring, self.cyclic_orders)

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.cyclic_orders))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % d for x, d in zip(a, self.cyclic_orders))

    def scale(self, c: int, a: Element) -> Element:
        return tuple((c * x) % d for x, d in zip(a, self.cyclic_orders))

    def element_order(self, a: Element) -> int:
        return lcm(*(d // gcd(d, x) for x, d in zip(a, self.cyclic_orders))) if a else 1

    def submodule(self, elements) -> "Submodule":
        """Canonical (interned) submodule from an already-closed element set."""
        elems = tuple(sorted(set(elements)))
        cached = self._interned.get(elems)
        if cached is None:
            cached = Submodule(self, elems)
            self._interned[elems] = cached
        return cached

    def zero_submodule(self) -> "Submodule":
        return self.submodule([self.zero])

    def full_submodule(self) -> "Submodule":
        return self.submodule(self.elements)

    def submodules(self) -> tuple["Submodule", ...]:
        return enumerate_submodules(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteModule) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"<FiniteModule {self.spec_string} order={self.order}>"


_UNSET = object()


class Submodule:
    """A submodule as a canonical sorted tuple of elements.

    Instances are interned per parent module, so equality checks are cheap and
    derived data (exponent, annihilator, generators) is computed at most once.
    Do not construct directly; use :func:`generate_submodule`,
    :meth:`FiniteModule.submodule`, or the lattice operations.
    """

    def __init__(self, module: FiniteModule, elements: tuple[Element, ...]):
        self.module = module
        self.elements = elements
        self.element_set = frozenset(elements)
        self.order = len(elements)
        if not elements or elements[0] != module.zero:
            raise ValueError("a submodule must contain the zero element")

    # -- basic structure -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    @property
    def is_full(self) -> bool:
        return self.order == self.module.order

    def __contains__(self, x: Element) -> bool:
        return x in self.element_set

    def __len__(self) -> int:
        return self.order

    def issubset(self, other: "Submodule") -> bool:
        self._check_same(other)
        return self.element_set <= other.element_set

    def __le__(self, other: "Submodule") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Submodule") -> bool:
        return self.issubset(other) and self.order < other.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and self.module == other.module
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.module._key, self.elements))

    # -- lattice operations ----------------------------------------------

    def sum(self, other: "Submodule") -> "Submodule":
        """Join: the smallest submodule containing both operands."""
        self._check_same(other)
        if self.element_set >= other.element_set:
            return self
        if other.element_set >= self.element_set:
            return other
        mod = self.module
        meet = self.element_set & other.element_set
        # |N + K| = |N| * |K| / |N ∩ K| in a finite abelian group, so the
        # union of translates below can stop as soon as it is full.
        expected = self.order * other.order // len(meet)
        if expected == mod.order:
            return mod.full_submodule()
        add = mod.add
        out = set(other.element_set)
        for n in self.elements:
            if n in other.element_set:
                continue
            out.update(add(n, k) for k in other.elements)
            if len(out) == expected:
                break
        if len(out) != expected:
            raise RuntimeError("internal error: submodule sum size mismatch")
        return mod.submodule(out)

    def intersect(self, other: "Submodule") -> "Submodule":
        self._check_same(other)
        if self.element_set <= other.element_set:
            return self
        if other.element_set <= self.element_set:
            return other
        return self.module.submodule(self.element_set & other.element_set)

    __add__ = sum
    __and__ = intersect

    def _check_same(self, other: "Submodule") -> None:
        if self.module != other.module:
            raise MismatchedModuleError(
                f"submodules of {self.module.spec_string} and "
                f"{other.module.spec_string} cannot be combined"
            )

    # -- derived data ------------------------------------------------------

    @cached_property
    def exponent(self) -> int:
        """Smallest e > 0 with e*x = 0 for every element x."""
        return lcm(*(self.module.element_order(x) for x in self.elements))

    @cached_property
    def annihilator(self) -> Ideal:
        """The ideal of ring scalars killing every element (generated by the
        exponent)."""
        return self.module.ring.ideal(self.exponent)

    @cached_property
    def generators(self) -> tuple[Element, ...]:
        """Deterministic generating set: repeatedly adopt the smallest
        (lexicographic) element not yet generated."""
        mod = self.module
        span = {mod.zero}
        gens: list[Element] = []
        for x in self.elements:
            if x in span:
                continue
            gens.append(x)
            cyc = _cyclic_elements(mod, x)
            span = {mod.add(s, t) for s in span for t in cyc}
            if len(span) == self.order:
                break
        return tuple(gens)

    def label(self) -> str:
        """Short display label, ``o=<order>;g=<generators>``."""
        gens = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.generators)
        return f"o={self.order};g={gens}"

    def brief(self) -> dict:
        """Small JSON-friendly description (order + canonical generators)."""
        return {
            "order": self.order,
            "generators": [list(g) for g in self.generators],
        }

    def __repr__(self) -> str:
        gens = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.generators)
        return f"<Submodule order={self.order} gens={gens or '0'} of {self.module.spec_string}>"


def _cyclic_elements(module: FiniteModule, g: Element) -> list[Element]:
    out = [module.zero]
    x = g
    while x != module.zero:
        out.append(x)
        x = module.add(x, g)
    return out


def build_module(ring: RingSpec, cyclic_orders, caps: Caps = DEFAULT_CAPS) -> FiniteModule:
    """Build the module ``Z_{d_1} + ... + Z_{d_k}`` over the given ring.

    An empty order list yields the zero module.  Raises
    :class:`IncompatibleRingError` when the exponent does not divide the ring
    modulus and :class:`SizeCapError` when the element universe would exceed
    ``caps.max_elements``.
    """
    return FiniteModule(ring, cyclic_orders, caps)


def generate_submodule(module: FiniteModule, gens) -> Submodule:
    """Smallest submodule containing the given elements.

    Closure under addition suffices: scalars act as repeated addition and
    negatives are additive powers in a finite group.
    """
    gen_list = [tuple(g) for g in gens]
    for g in gen_list:
        if g not in module.element_set:
            raise ValueError(f"element {g} is not in module {module.spec_string}")
    span = {module.zero}
    for g in gen_list:
        if g in span:
            continue
        cyc = _cyclic_elements(module, g)
        span = {module.add(s, t) for s in span for t in cyc}
    return module.submodule(span)


def enumerate_submodules(module: FiniteModule) -> tuple[Submodule, ...]:
    """Every submodule exactly once, sorted by (order, element list).

    Strategy: seed with all cyclic submodules, then close under pairwise
    joins.  Complete because every submodule is a join of cyclic ones.
    """
    if module._submodules is not None:
        return module._submodules
    cap = module.caps.max_submodules
    found: dict[tuple[Element, ...], Submodule] = {}

    def register(sub: Submodule) -> bool:
        if sub.elements in found:
            return False
        if len(found) >= cap:
            raise SizeCapError(
                f"submodule lattice of {module.spec_string} exceeds cap {cap}"
            )
        found[sub.elements] = sub
        return True

    register(module.zero_submodule())
    if module.rank == 1:
        # In a cyclic module the subgroup generated by m is the one generated
        # by gcd(m, n), so one subgroup per divisor covers every cyclic seed.
        n = module.cyclic_orders[0]
        for d in divisors(n):
            if d == n:
                continue
            register(module.submodule([(d * i % n,) for i in range(n // d)]))
    else:
        for m in module.elements:
            register(module.submodule(_cyclic_elements(module, m)))

    frontier = list(found.values())
    while frontier:
        snapshot = list(found.values())
        fresh: list[Submodule] = []
        for a in frontier:
            for b in snapshot:
                j = a.sum(b)
                if register(j):
                    fresh.append(j)
        frontier = fresh

    subs = tuple(sorted(found.values(), key=lambda s: (s.order, s.elements)))
    module._submodules = subs
    return subs


def annihilator_in_ring(submodule: Submodule) -> Ideal:
    """The ideal of scalars annihilating the submodule."""
    return submodule.annihilator


def annihilator_in_module(module: FiniteModule, ideal: Ideal) -> Submodule:
    """The elements killed by the ideal's generator: ``{m : g*m = 0}``."""
    if ideal.ring != module.ring:
        raise MismatchedModuleError(
            f"ideal of {ideal.ring} applied to module over {module.ring}"
        )
    g = ideal.generator
    zero = module.zero
    return module.submodule(
        [m for m in module.elements if module.scale(g, m) == zero]
    )


@dataclass
class QuotientModule:
    """A quotient realized as a fresh module plus the projection map.

    ``projection`` sends each parent element to its image's coordinates in
    the quotient module.
    """

    module: FiniteModule
    projection: dict[Element, Element]

    def project(self, x: Element) -> Element:
        return self.projection[x]

    def project_submodule(self, sub: Submodule) -> Submodule:
        return self.module.submodule({self.projection[x] for x in sub.elements})


def quotient_module(module: FiniteModule, sub: Submodule) -> QuotientModule:
    """The quotient by a submodule, as an isomorphic module of coset
    representatives.

    The coset group is decomposed into cyclic invariant factors by repeatedly
    splitting off an element of maximal order, so the result is a genuine
    :class:`FiniteModule` and submodules upstairs containing ``sub``
    correspond bijectively to submodules of the quotient.
    """
    if sub.module != module:
        raise MismatchedModuleError("submodule does not belong to the module")
    rep: dict[Element, Element] = {}
    reps: list[Element] = []
    for x in module.elements:  # ascending, so the first member seen is the min
        if x in rep:
            continue
        for t in sub.elements:
            rep[module.add(x, t)] = x
        reps.append(x)

    def qadd(a: Element, b: Element) -> Element:
        return rep[module.add(a, b)]

    basis = _decompose_abelian(reps, qadd, module.zero)
    orders = [o for _, o in basis]
    quotient = FiniteModule(module.ring, orders, module.caps)

    multiples: list[list[Element]] = []
    for g, o in basis:
        row = [module.zero]
        cur = module.zero
        for _ in range(o - 1):
            cur = qadd(cur, g)
            row.append(cur)
        multiples.append(row)
    coord_of: dict[Element, Element] = {}
    for coords in itertools.product(*(range(o) for o in orders)):
        e = module.zero
        for row, t in zip(multiples, coords):
            e = qadd(e, row[t])
        coord_of[e] = coords
    if len(coord_of) != len(reps):
        raise RuntimeError("internal error: quotient decomposition not a bijection")
    projection = {x: coord_of[rep[x]] for x in module.elements}
    return QuotientModule(quotient, projection)


def _decompose_abelian(reps, add, zero) -> list[tuple[Element, int]]:
    """Invariant-factor basis of a finite abelian group given by coset
    representatives and an addition map.

    Returns ``[(g_1, d_1), (g_2, d_2), ...]`` with each d dividing the one
    before it.  The first basis element has maximal order d_1 (= the group
    exponent); recursive basis elements of the quotient by it are lifted and
    adjusted so their order is preserved: if m*b = c*g_1 then d_1 | (d_1/m)*c
    forces m | c, and b - (c/m)*g_1 has exact order m.
    """
    if len(reps) == 1:
        return []

    def order_of(x) -> int:
        k, y = 1, x
        while y != zero:
            y = add(y, x)
            k += 1
        return k

    g, d = zero, 1
    for r in reps:  # ascending, so ties keep the lexicographically least
        if r == zero:
            continue
        o = order_of(r)
        if o > d:
            g, d = r, o

    gens = [zero]
    cur = zero
    for _ in range(d - 1):
        cur = add(cur, g)
        gens.append(cur)

    rep2: dict[Element, Element] = {}
    reps2: list[Element] = []
    for x in reps:
        if x in rep2:
            continue
        for t in gens:
            rep2[add(x, t)] = x
        reps2.append(x)

    def add2(a, b):
        return rep2[add(a, b)]

    out = [(g, d)]
    for b, m in _decompose_abelian(reps2, add2, zero):
        t = zero
        for _ in range(m):
            t = add(t, b)
        c = gens.index(t)
        if c % m != 0:
            raise RuntimeError("internal error: basis lift divisibility failed")
        k = (c // m) % d
        lifted = add(b, gens[(d - k) % d])
        out.append((lifted, m))
    return out
