"""Class-size invariants of a finite group.

Everything here is derived from the multiset of conjugacy class sizes and
from Sylow structure: the class-size set, centralizer indices, the largest
prime-power parts occurring among class sizes, the classification of how a
prime's powers show up across class sizes, p-centrality, and the
commuting-Sylow criterion that ties class sizes to subgroup structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .arith import IntSet, is_prime, p_part, prime_divisors
from .errors import NotAPElement
from .group import Group, Subgroup

# How the p-parts of the class sizes behave:
#   mixed          two or more distinct p-parts above 1
#   uniform_active one p-part above 1, witnessed by some p-element's class
#   uniform_inert  at most one p-part above 1, no p-element's class shows it
KIND_MIXED = "mixed"
KIND_UNIFORM_ACTIVE = "uniform_active"
KIND_UNIFORM_INERT = "uniform_inert"


@dataclass(frozen=True)
class ClassSizeSet:
    """Distinct conjugacy class sizes, with multiplicities kept for diagnostics."""

    sizes: IntSet
    multiplicities: tuple[tuple[int, int], ...]  # (size, count), ascending

    def sorted_sizes(self) -> list[int]:
        return sorted(self.sizes)

    def count_of(self, size: int) -> int:
        for s, c in self.multiplicities:
            if s == size:
                return c
        return 0

    def __contains__(self, size: int) -> bool:
        return size in self.sizes


@dataclass(frozen=True)
class PPartClassification:
    """How the powers of one prime appear across the class sizes.

    parts lists the distinct p-parts of the class sizes, ascending (always
    starting at 1).  exponent is set when exactly one part above 1 occurs,
    in which case that part is p**exponent; a mixed pattern has no exponent.
    """

    p: int
    kind: str
    exponent: int | None
    parts: tuple[int, ...]

    @property
    def is_uniform(self) -> bool:
        return self.kind != KIND_MIXED


def class_size_set(g: Group) -> ClassSizeSet:
    counts: dict[int, int] = {}
    for cls in g.conjugacy_classes():
        counts[cls.size] = counts.get(cls.size, 0) + 1
    for size in counts:
        if g.order % size != 0:
            raise AssertionError(f"class size {size} does not divide |G| = {g.order}")
    if 1 not in counts:
        raise AssertionError("identity class missing")
    return ClassSizeSet(
        sizes=frozenset(counts),
        multiplicities=tuple(sorted(counts.items())),
    )


def centralizer_index(g: Group, within: Subgroup | None, x) -> int:
    """|N| / |C_N(x)| for a subgroup N; the whole group when within is None.

    x must lie in g but not necessarily in N.
    """
    i = x if isinstance(x, int) else g.index_of(x)
    cmask = g.centralizer_mask_idx(i)
    if within is None:
        total, hits = g.order, int(cmask.sum())
    else:
        total, hits = within.order, int(cmask[within.indices].sum())
    if total % hits != 0:
        raise AssertionError("centralizer size does not divide the subgroup order")
    return total // hits


def max_class_p_part(g: Group, p: int) -> int:
    """Largest p-part occurring among the class sizes; divides |G|_p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    best = max(p_part(cls.size, p) for cls in g.conjugacy_classes())
    if p_part(g.order, p) % best != 0:
        raise AssertionError("class-size p-part exceeds the group order p-part")
    return best


def max_class_pi_part(g: Group, primes: Iterable[int]) -> int:
    out = 1
    for p in sorted(set(primes)):
        out *= max_class_p_part(g, p)
    return out


def max_class_part(g: Group) -> int:
    """Product of the largest class-size p-parts over all primes dividing |G|."""
    return max_class_pi_part(g, prime_divisors(g.order))


def _class_size_per_element(g: Group) -> np.ndarray:
    classes = g.conjugacy_classes()
    sizes = np.empty(g.order, dtype=np.int64)
    for cls in classes:
        sizes[cls.indices] = cls.size
    return sizes


def classify_p_parts(g: Group, p: int) -> PPartClassification:
    """Classify the p-part pattern of the class sizes.

    With at most one p-part above 1 the pattern is uniform; it is active
    when some p-element's own class realizes the nontrivial part, inert
    otherwise (in particular when every class size is prime to p).
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    css = class_size_set(g)
    parts = tuple(sorted({p_part(s, p) for s in css.sizes}))
    non_one = [v for v in parts if v > 1]
    if len(non_one) > 1:
        return PPartClassification(p, KIND_MIXED, None, parts)
    if not non_one:
        return PPartClassification(p, KIND_UNIFORM_INERT, None, parts)
    exponent = 0
    v = non_one[0]
    while v > 1:
        v //= p
        exponent += 1
    sizes = _class_size_per_element(g)
    pmask = g.p_element_mask(p)
    active = bool((sizes[pmask] % p == 0).any())
    kind = KIND_UNIFORM_ACTIVE if active else KIND_UNIFORM_INERT
    return PPartClassification(p, kind, exponent, parts)


# ----- p-centrality ---------------------------------------------------------


def sylow_center_orbit(g: Group, p: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """(subgroup indices, center indices) for every Sylow p-subgroup.

    One Sylow subgroup is computed directly; the rest are its conjugates,
    and conjugation carries centers to centers.
    """
    syl = g.sylow_subgroup(p)
    sg = syl.as_group()
    center_positions = sg.center().indices
    start_sub = syl.indices
    start_cen = np.sort(syl.indices[center_positions])
    seen: dict[bytes, tuple[np.ndarray, np.ndarray]] = {
        start_sub.tobytes(): (start_sub, start_cen)
    }
    queue = [(start_sub, start_cen)]
    while queue:
        sub, cen = queue.pop(0)
        for gi in g._gen_idx:
            isub = g.conjugate_indices(sub, gi)
            key = isub.tobytes()
            if key not in seen:
                icen = g.conjugate_indices(cen, gi)
                seen[key] = (isub, icen)
                queue.append((isub, icen))
    return list(seen.values())


def sylow_center_union_mask(g: Group, p: int) -> np.ndarray:
    """Mask of elements central in at least one Sylow p-subgroup."""
    mask = np.zeros(g.order, dtype=bool)
    for _, cen in sylow_center_orbit(g, p):
        mask[cen] = True
    return mask


def is_p_central(g: Group, x, p: int) -> bool:
    """True iff the p-element x lies in the center of some Sylow p-subgroup."""
    i = x if isinstance(x, int) else g.index_of(x)
    if not g.p_element_mask(p)[i]:
        raise NotAPElement(f"element of order {g.order_of_idx(i)} is not a {p}-element")
    return bool(sylow_center_union_mask(g, p)[i])


def all_p_elements_p_central(g: Group, p: int) -> bool:
    pmask = g.p_element_mask(p)
    central = sylow_center_union_mask(g, p)
    return bool(central[pmask].all())


# ----- commuting Sylow pairs --------------------------------------------------


def _subgroups_commute(g: Group, a: Subgroup, b: Subgroup) -> bool:
    # elementwise commuting follows from generator pairs commuting
    return all(
        g.mult_idx(i, j) == g.mult_idx(j, i)
        for i in a.ensure_gens()
        for j in b.ensure_gens()
    )


def sylow_commute_criterion(g: Group, p: int, q: int) -> tuple[bool, bool]:
    """Class-size side and subgroup side of the commuting-Sylow criterion.

    class_side: no q-element has class size divisible by p and no p-element
    has class size divisible by q.  subgroup_side: some Sylow p-subgroup
    commutes elementwise with some Sylow q-subgroup (scan over all conjugate
    pairs).  The two are expected to coincide; callers assert it.
    """
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p and q must be prime, got {p}, {q}")
    if p == q:
        raise ValueError("p and q must be distinct")
    sizes = _class_size_per_element(g)
    p_elems = g.p_element_mask(p)
    q_elems = g.p_element_mask(q)
    class_side = not bool((sizes[q_elems] % p == 0).any()) and not bool(
        (sizes[p_elems] % q == 0).any()
    )
    p_conjs = g.subgroup_conjugates(g.sylow_subgroup(p))
    q_conjs = g.subgroup_conjugates(g.sylow_subgroup(q))
    subgroup_side = any(
        _subgroups_commute(g, a, b) for a in p_conjs for b in q_conjs
    )
    return class_side, subgroup_side
