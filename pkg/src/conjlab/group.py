"""Exhaustive finite permutation-group engine.

A Group owns its complete element table: an (order x degree) integer matrix
whose rows are image arrays, sorted lexicographically so that element
identity is row identity and row 0 is always the group identity.  Every
query — conjugacy classes, centralizers, Sylow subgroups, normalizers,
normal subgroups, quotients, composition factors — is answered by direct,
reproducible search over that table.  This trades memory for the ability
to verify structural claims exhaustively; the intended scale is group
order up to about 10^5.

Composition convention (see perm.py): ``p * q`` applies p first, then q.
Conjugation of x by g is ``g^-1 * x * g`` in that order.  On the table,
``mult(x, s)`` for every row x at once is the fancy index ``s_row[rows]``,
which is what the cached per-generator index maps are built from; all
closures run as integer BFS over those maps.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

import numpy as np

from .arith import is_prime, p_part
from .errors import (
    BudgetExceeded,
    CapExceeded,
    ElementNotInGroup,
    InvalidPermutation,
    NotASubgroup,
    NotNormal,
)
from .perm import Perm

DEFAULT_ELEMENT_CAP = 100_000
DEFAULT_NODE_BUDGET = 1_000_000
CAP_ENV_VAR = "CONJLAB_CAP"

# a coset-action table bigger than this many cells is refused (see quotient)
_QUOTIENT_CELL_LIMIT = 50_000_000

# cap on cached right-multiplication maps, in bytes
_RMUL_CACHE_BYTES = 192_000_000


def default_element_cap() -> int:
    """Default element cap, honoring the CONJLAB_CAP environment variable."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ELEMENT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CapExceeded(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CapExceeded(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


class _Budget:
    """Counts search nodes and fails hard when the budget runs out."""

    def __init__(self, limit: int, what: str):
        self.limit = int(limit)
        self.used = 0
        self.what = what

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"{self.what}: budget of {self.limit} nodes exhausted")


def _images_dtype(degree: int):
    return np.int16 if degree <= 32000 else np.int32


def _as_image_row(perm, degree: int, dtype) -> np.ndarray:
    if isinstance(perm, Perm):
        if perm.degree != degree:
            raise InvalidPermutation(f"degree mismatch: {perm.degree} != {degree}")
        return np.array(perm.images, dtype=dtype)
    row = np.asarray(perm)
    if row.shape != (degree,):
        raise InvalidPermutation(f"image array has shape {row.shape}, expected ({degree},)")
    if not np.array_equal(np.sort(row), np.arange(degree)):
        raise InvalidPermutation("image array is not a bijection")
    return row.astype(dtype)


class Group:
    """A finite permutation group with its full element table.

    Do not call the constructor directly; use group_from_generators,
    direct_product, corpus.build or Subgroup.as_group.
    """

    def __init__(self, rows: np.ndarray, gen_rows: list[np.ndarray], name: str):
        order = np.lexsort(rows.T[::-1])
        self._rows = np.ascontiguousarray(rows[order])
        self.degree = int(rows.shape[1])
        self.name = name
        self._index: dict[bytes, int] = {
            r.tobytes(): i for i, r in enumerate(self._rows)
        }
        if len(self._index) != len(self._rows):
            raise InvalidPermutation("duplicate rows in element table")
        ident = np.arange(self.degree, dtype=self._rows.dtype)
        if not np.array_equal(self._rows[0], ident):
            raise InvalidPermutation("identity missing from element table")
        self._gen_idx = [self._index[g.astype(self._rows.dtype).tobytes()] for g in gen_rows]
        # lazy caches
        self._inv_idx: np.ndarray | None = None
        self._inv_rows: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._classes: list[ConjugacyClass] | None = None
        self._class_id: np.ndarray | None = None
        self._rmul_cache: dict[int, np.ndarray] = {}
        self._conj_cache: dict[int, np.ndarray] = {}
        self._normals: list[Subgroup] | None = None

    # ----- basic accessors -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def generators(self) -> list[Perm]:
        return [self.element(i) for i in self._gen_idx]

    def element(self, i: int) -> Perm:
        return Perm(tuple(int(v) for v in self._rows[i]))

    def elements(self) -> Iterator[Perm]:
        for i in range(self.order):
            yield self.element(i)

    def index_of(self, perm: Perm) -> int:
        if isinstance(perm, Perm) and perm.degree != self.degree:
            raise ElementNotInGroup(
                f"degree {perm.degree} element cannot lie in {self.name} (degree {self.degree})"
            )
        row = _as_image_row(perm, self.degree, self._rows.dtype)
        try:
            return self._index[row.tobytes()]
        except KeyError:
            raise ElementNotInGroup(f"{perm!r} is not in {self.name}") from None

    def __contains__(self, perm) -> bool:
        try:
            self.index_of(perm)
            return True
        except (ElementNotInGroup, InvalidPermutation):
            return False

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    # ----- index-level arithmetic -------------------------------------------

    def _indices_of_rows(self, mat: np.ndarray) -> np.ndarray:
        idx = self._index
        try:
            return np.fromiter(
                (idx[r.tobytes()] for r in np.ascontiguousarray(mat, dtype=self._rows.dtype)),
                dtype=np.int64,
                count=len(mat),
            )
        except KeyError:
            raise ElementNotInGroup("product left the element table (set not closed)") from None

    def mult_idx(self, i: int, j: int) -> int:
        # x_i then x_j
        row = self._rows[j][self._rows[i]]
        return self._index[row.tobytes()]

    def inverse_indices(self) -> np.ndarray:
        if self._inv_idx is None:
            rows = self._rows
            inv = np.empty_like(rows)
            vals = np.broadcast_to(
                np.arange(self.degree, dtype=rows.dtype), rows.shape
            )
            np.put_along_axis(inv, rows.astype(np.int64), vals, axis=1)
            self._inv_rows = inv
            self._inv_idx = self._indices_of_rows(inv)
        return self._inv_idx

    def _inverse_rows(self) -> np.ndarray:
        self.inverse_indices()
        return self._inv_rows

    def inv_idx(self, i: int) -> int:
        return int(self.inverse_indices()[i])

    def commutator_idx(self, i: int, j: int) -> int:
        """Index of x_i^-1 * x_j^-1 * x_i * x_j."""
        a = self.mult_idx(self.inv_idx(i), self.inv_idx(j))
        return self.mult_idx(self.mult_idx(a, i), j)

    def conj_idx(self, x: int, g: int) -> int:
        """Index of g^-1 * x_x * g."""
        a = self.mult_idx(self.inv_idx(g), x)
        return self.mult_idx(a, g)

    def element_orders(self) -> np.ndarray:
        """Order of every element, as one vectorized power chain."""
        if self._orders is None:
            rows = self._rows
            ident = np.arange(self.degree, dtype=rows.dtype)
            orders = np.zeros(self.order, dtype=np.int64)
            power = rows.copy()
            alive = np.arange(self.order)
            k = 1
            while alive.size:
                done = np.all(power == ident, axis=1)
                orders[alive[done]] = k
                alive = alive[~done]
                power = power[~done]
                if alive.size:
                    power = np.take_along_axis(
                        rows[alive], power.astype(np.int64), axis=1
                    )
                    k += 1
            self._orders = orders
        return self._orders

    def order_of_idx(self, i: int) -> int:
        return int(self.element_orders()[i])

    def p_element_mask(self, p: int) -> np.ndarray:
        """Elements of p-power order (identity included)."""
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        stripped = self.element_orders().copy()
        while True:
            m = stripped % p == 0
            if not m.any():
                break
            stripped[m] //= p
        return stripped == 1

    def is_abelian(self) -> bool:
        return all(
            self.mult_idx(a, b) == self.mult_idx(b, a)
            for a in self._gen_idx
            for b in self._gen_idx
        )

    # ----- cached index maps -------------------------------------------------

    def _rmul_map(self, s: int) -> np.ndarray:
        """Map i -> index of (x_i * s), for all i at once."""
        cached = self._rmul_cache.get(s)
        if cached is None:
            srow = self._rows[s].astype(np.int64)
            cached = self._indices_of_rows(srow[self._rows])
            per_entry = 8 * self.order
            if (len(self._rmul_cache) + 1) * per_entry > _RMUL_CACHE_BYTES:
                self._rmul_cache.pop(next(iter(self._rmul_cache)))
            self._rmul_cache[s] = cached
        return cached

    def _conj_map(self, g: int) -> np.ndarray:
        """Map i -> index of g^-1 * x_i * g, for all i at once."""
        cached = self._conj_cache.get(g)
        if cached is None:
            grow = self._rows[g].astype(np.int64)
            ginv = self._inverse_rows()[g].astype(np.int64)
            conj = grow[self._rows[:, ginv]]
            cached = self._indices_of_rows(conj)
            self._conj_cache[g] = cached
        return cached

    # ----- closures ----------------------------------------------------------

    def _closed_mask(self, gen_indices: Sequence[int], seed_mask: np.ndarray | None = None) -> np.ndarray:
        """Member mask of <gens>, optionally seeded with a known subgroup of it."""
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        if seed_mask is not None:
            mask |= seed_mask
        frontier = np.flatnonzero(mask)
        maps = [self._rmul_map(int(s)) for s in gen_indices]
        while frontier.size:
            fresh_parts = []
            for m in maps:
                t = m[frontier]
                t = t[~mask[t]]
                if t.size:
                    t = np.unique(t)
                    mask[t] = True
                    fresh_parts.append(t)
            frontier = (
                np.concatenate(fresh_parts) if fresh_parts else np.empty(0, dtype=np.int64)
            )
        return mask

    def _greedy_gen_indices(self, indices: np.ndarray) -> list[int]:
        """Small generating set for a member-index set known to be a subgroup."""
        gens: list[int] = []
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        for i in indices:
            i = int(i)
            if not mask[i]:
                gens.append(i)
                mask = self._closed_mask(gens, seed_mask=mask)
        return gens

    def _validate_subgroup(self, h: "Subgroup") -> None:
        if h.parent is not self:
            raise NotASubgroup("subgroup belongs to a different group")
        closure = self._closed_mask(h.ensure_gens())
        if int(closure.sum()) != h.order or not closure[h.indices].all():
            raise NotASubgroup("element set is not closed under the group operation")

    # ----- conjugacy classes --------------------------------------------------

    def conjugacy_classes(self) -> list["ConjugacyClass"]:
        """Classes ordered by (size, lexicographically least member)."""
        if self._classes is None:
            cmaps = [self._conj_map(g) for g in self._gen_idx]
            class_of = np.full(self.order, -1, dtype=np.int64)
            raw: list[np.ndarray] = []
            for i in range(self.order):
                if class_of[i] >= 0:
                    continue
                cid = len(raw)
                class_of[i] = cid
                frontier = np.array([i], dtype=np.int64)
                members = [frontier]
                while frontier.size:
                    fresh_parts = []
                    for m in cmaps:
                        t = m[frontier]
                        t = t[class_of[t] < 0]
                        if t.size:
                            t = np.unique(t)
                            class_of[t] = cid
                            fresh_parts.append(t)
                    frontier = (
                        np.concatenate(fresh_parts)
                        if fresh_parts
                        else np.empty(0, dtype=np.int64)
                    )
                    if frontier.size:
                        members.append(frontier)
                raw.append(np.unique(np.concatenate(members)))
            raw.sort(key=lambda idx: (len(idx), int(idx[0])))
            self._classes = [ConjugacyClass(self, idx) for idx in raw]
            class_id = np.empty(self.order, dtype=np.int64)
            for cid, cls in enumerate(self._classes):
                class_id[cls.indices] = cid
            self._class_id = class_id
        return self._classes

    def class_id_of_idx(self, i: int) -> int:
        self.conjugacy_classes()
        return int(self._class_id[i])

    def class_size_of_idx(self, i: int) -> int:
        return self.conjugacy_classes()[self.class_id_of_idx(i)].size

    def centralizer_mask_idx(self, i: int) -> np.ndarray:
        # narrow the candidate set one column at a time before the exact
        # row comparison; generic non-commuting pairs disagree on an early
        # point, so each pass shrinks the set geometrically
        x = self._rows[i].astype(np.int64)
        cand = np.arange(self.order, dtype=np.int64)
        for col in range(min(self.degree, 12)):
            if cand.size * self.degree <= 2 * self.order:
                break
            lhs = x[self._rows[cand, col]]       # mult(y, x) at col
            rhs = self._rows[cand, int(x[col])]  # mult(x, y) at col
            cand = cand[lhs == rhs]
        sub = self._rows[cand]
        ok = np.all(x[sub] == sub[:, x], axis=1)
        mask = np.zeros(self.order, dtype=bool)
        mask[cand[ok]] = True
        return mask

    def centralizer(self, x) -> "Subgroup":
        i = x if isinstance(x, int) else self.index_of(x)
        mask = self.centralizer_mask_idx(i)
        return Subgroup(self, np.flatnonzero(mask))

    def center(self) -> "Subgroup":
        classes = self.conjugacy_classes()
        idx = np.array(
            sorted(int(c.indices[0]) for c in classes if c.size == 1), dtype=np.int64
        )
        return Subgroup(self, idx)

    # ----- subgroup constructions ----------------------------------------------

    def subgroup_generated(self, seed: Iterable) -> "Subgroup":
        """Smallest subgroup containing the seed elements (Perms or indices)."""
        seed_idx = [s if isinstance(s, int) else self.index_of(s) for s in seed]
        gens: list[int] = []
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        for i in seed_idx:
            if not mask[i]:
                gens.append(int(i))
                mask = self._closed_mask(gens, seed_mask=mask)
        return Subgroup(self, np.flatnonzero(mask), gens)

    def sylow_subgroup(self, p: int) -> "Subgroup":
        """Sylow p-subgroup grown from the first p-element by normalizer steps."""
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        target = p_part(self.order, p)
        if target == 1:
            return Subgroup(self, np.array([0], dtype=np.int64), [])
        cand = self.p_element_mask(p) & (self.element_orders() > 1)
        first = int(np.flatnonzero(cand)[0])
        gens = [first]
        mask = self._closed_mask(gens)
        while int(mask.sum()) < target:
            nmask = self._normalizer_mask(gens, mask)
            pick = nmask & cand & ~mask
            y = int(np.flatnonzero(pick)[0])
            gens.append(y)
            mask = self._closed_mask(gens, seed_mask=mask)
        members = np.flatnonzero(mask)
        if members.size != target:
            raise NotASubgroup(
                f"sylow construction produced order {members.size}, wanted {target}"
            )
        return Subgroup(self, members, gens)

    def _normalizer_mask(self, sub_gens: Sequence[int], sub_mask: np.ndarray) -> np.ndarray:
        """Mask of y with y^-1 s y in the subgroup for each subgroup generator s."""
        out = np.ones(self.order, dtype=bool)
        inv_rows = self._inverse_rows().astype(np.int64)
        for s in sub_gens:
            srow = self._rows[s].astype(np.int64)
            conj = np.take_along_axis(self._rows, srow[inv_rows], axis=1)
            out &= sub_mask[self._indices_of_rows(conj)]
        return out

    def normalizer(self, h: "Subgroup") -> "Subgroup":
        self._validate_subgroup(h)
        mask = self._normalizer_mask(h.ensure_gens(), h.mask())
        return Subgroup(self, np.flatnonzero(mask))

    def is_normal(self, h: "Subgroup") -> bool:
        if h.parent is not self:
            raise NotASubgroup("subgroup belongs to a different group")
        mask = h.mask()
        return all(
            bool(mask[self._conj_map(g)[h.indices]].all()) for g in self._gen_idx
        )

    def conjugate_indices(self, indices: np.ndarray, g: int) -> np.ndarray:
        """Image of a member-index set under conjugation by generator index g."""
        return np.sort(self._conj_map(g)[indices])

    def subgroup_conjugates(self, h: "Subgroup") -> list["Subgroup"]:
        """Orbit of a subgroup under conjugation, in BFS discovery order."""
        if h.parent is not self:
            raise NotASubgroup("subgroup belongs to a different group")
        start = np.sort(h.indices)
        seen = {start.tobytes(): start}
        queue = [start]
        while queue:
            cur = queue.pop(0)
            for g in self._gen_idx:
                img = self.conjugate_indices(cur, g)
                k = img.tobytes()
                if k not in seen:
                    seen[k] = img
                    queue.append(img)
        return [Subgroup(self, idx) for idx in seen.values()]

    # ----- normal subgroups -----------------------------------------------------

    def _normal_closure_data(
        self, start: int, budget: _Budget
    ) -> tuple[np.ndarray, list[int]]:
        """Mask and generators of the normal closure of one element.

        Grows <gens> and, while some conjugate of a member escapes, adjoins the
        least escaping conjugate; the generator list stays logarithmic.
        """
        gens = [int(start)]
        mask = self._closed_mask(gens)
        cmaps = [self._conj_map(g) for g in self._gen_idx]
        while True:
            members = np.flatnonzero(mask)
            worst = None
            for cm in cmaps:
                t = cm[members]
                bad = t[~mask[t]]
                if bad.size:
                    m = int(bad.min())
                    worst = m if worst is None else min(worst, m)
            if worst is None:
                return mask, gens
            budget.spend()
            gens.append(worst)
            mask = self._closed_mask(gens, seed_mask=mask)

    def normal_subgroups(self, budget: int = DEFAULT_NODE_BUDGET) -> list["Subgroup"]:
        """All normal subgroups, ordered by (order, element index list).

        Every normal subgroup is a union of conjugacy classes and equals the
        join of the normal closures of the classes it contains, so the search
        computes one closure per class and then join-closes the collection
        (the product of two normal subgroups is again one).  Each closure or
        join spends budget; exhaustion raises BudgetExceeded, never truncates.
        """
        if self._normals is not None:
            return list(self._normals)
        counter = _Budget(budget, f"normal_subgroups({self.name})")
        classes = self.conjugacy_classes()

        entries: dict[bytes, tuple[np.ndarray, np.ndarray, list[int]]] = {}

        def add(mask: np.ndarray, gens: list[int]) -> tuple[bytes, bool]:
            idx = np.flatnonzero(mask)
            k = idx.tobytes()
            if k in entries:
                return k, False
            entries[k] = (mask, idx, gens)
            return k, True

        triv = np.zeros(self.order, dtype=bool)
        triv[0] = True
        add(triv, [])

        atom_keys: list[bytes] = []
        for cls in classes:
            rep = int(cls.indices[0])
            if rep == 0:
                continue
            counter.spend()
            mask, gens = self._normal_closure_data(rep, counter)
            k, _ = add(mask, gens)
            if k not in atom_keys:
                atom_keys.append(k)

        queue = list(entries.keys())
        while queue:
            nk = queue.pop(0)
            nmask, _, ngens = entries[nk]
            for ak in atom_keys:
                amask, _, agens = entries[ak]
                if not np.any(amask & ~nmask):
                    continue  # atom already inside
                counter.spend()
                gens = list(dict.fromkeys(ngens + agens))
                jmask = self._closed_mask(gens, seed_mask=nmask | amask)
                k, new = add(jmask, gens)
                if new:
                    queue.append(k)

        subs = [Subgroup(self, idx, gens) for (_, idx, gens) in entries.values()]
        subs.sort(key=lambda s: (s.order, tuple(int(i) for i in s.indices)))
        self._normals = subs
        return list(subs)

    def p_prime_core(self, p: int, budget: int = DEFAULT_NODE_BUDGET) -> "Subgroup":
        """Largest normal subgroup of order coprime to p."""
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        cands = [s for s in self.normal_subgroups(budget) if s.order % p != 0]
        best = max(cands, key=lambda s: s.order)
        for s in cands:
            if not best.mask()[s.indices].all():
                raise NotASubgroup("p'-core is not unique; engine invariant broken")
        return best

    def has_normal_p_complement(self, p: int) -> bool:
        """True iff the p'-order elements form a (then normal) subgroup."""
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        target = self.order // p_part(self.order, p)
        pprime = self.element_orders() % p != 0
        if int(pprime.sum()) != target:
            return False
        idxs = np.flatnonzero(pprime)
        gens: list[int] = []
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        for i in idxs:
            if not mask[i]:
                gens.append(int(i))
                mask = self._closed_mask(gens, seed_mask=mask)
                if np.any(mask & ~pprime):
                    return False
        return int(mask.sum()) == target

    # ----- quotients ---------------------------------------------------------

    def quotient(self, k: "Subgroup") -> tuple["Group", "QuotientMap"]:
        """Coset-action quotient and the projection map.

        The quotient acts on the left cosets of k, numbered by least member;
        generators project to the coset permutations they induce.
        """
        self._validate_subgroup(k)
        if not self.is_normal(k):
            raise NotNormal(f"subgroup of order {k.order} is not normal in {self.name}")
        q_order = self.order // k.order
        if q_order * q_order > _QUOTIENT_CELL_LIMIT:
            raise CapExceeded(
                f"coset action table for index {q_order} would exceed the cell limit"
            )
        coset_id = np.full(self.order, -1, dtype=np.int64)
        reps: list[int] = []
        krows = self._rows[k.indices].astype(np.int64)
        for i in range(self.order):
            if coset_id[i] >= 0:
                continue
            members = krows[:, self._rows[i].astype(np.int64)]
            coset_id[self._indices_of_rows(members)] = len(reps)
            reps.append(i)
        rep_arr = np.array(reps, dtype=np.int64)
        rep_rows = self._rows[rep_arr].astype(np.int64)
        qgens = []
        for g in self._gen_idx:
            grow = self._rows[g].astype(np.int64)
            prod = grow[rep_rows]
            qgens.append(Perm(coset_id[self._indices_of_rows(prod)]))
        q = group_from_generators(
            q_order, qgens, cap=max(q_order, 1), name=f"{self.name}/{k.order}"
        )
        if q.order != q_order:
            raise NotNormal("coset action has wrong order; subgroup not normal")
        return q, QuotientMap(self, k, q, coset_id, rep_arr)

    # ----- composition factors --------------------------------------------------

    def composition_factors(self, budget: int = DEFAULT_NODE_BUDGET) -> list[tuple[int, bool]]:
        """(order, is_abelian) pairs along a composition series.

        Recurses through a maximal proper normal subgroup, chosen as the
        largest order with ties broken by least element index list; the
        factor multiset is choice-independent (Jordan-Hoelder).
        """
        if self.order == 1:
            return []
        proper = [s for s in self.normal_subgroups(budget) if s.order < self.order]
        m = min(proper, key=lambda s: (-s.order, tuple(int(i) for i in s.indices)))
        mmask = m.mask()
        q_abelian = all(
            mmask[self.commutator_idx(a, b)]
            for a in self._gen_idx
            for b in self._gen_idx
        )
        below = m.as_group().composition_factors(budget) if m.order > 1 else []
        return below + [(self.order // m.order, q_abelian)]

    def composition_series(self, budget: int = DEFAULT_NODE_BUDGET) -> list["Subgroup"]:
        """Subgroup chain from trivial to the whole group with simple steps.

        Uses the same maximal-normal choice as composition_factors; members
        of the recursive series are mapped back through the subgroup's
        sorted-index correspondence.
        """
        full = Subgroup(self, np.arange(self.order, dtype=np.int64), list(self._gen_idx))
        if self.order == 1:
            return [full]
        proper = [s for s in self.normal_subgroups(budget) if s.order < self.order]
        m = min(proper, key=lambda s: (-s.order, tuple(int(i) for i in s.indices)))
        if m.order == 1:
            below = [Subgroup(self, np.array([0], dtype=np.int64), [])]
        else:
            below = [
                Subgroup(self, m.indices[s.indices])
                for s in m.as_group().composition_series(budget)
            ]
        return below + [full]


class ConjugacyClass:
    """One conjugacy class, stored as sorted member indices."""

    __slots__ = ("parent", "indices")

    def __init__(self, parent: Group, indices: np.ndarray):
        self.parent = parent
        self.indices = indices

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def representative(self) -> Perm:
        return self.parent.element(int(self.indices[0]))

    def members(self) -> Iterator[Perm]:
        for i in self.indices:
            yield self.parent.element(int(i))

    def __repr__(self) -> str:
        return f"ConjugacyClass(size={self.size}, rep={self.representative.cycle_string()})"


class Subgroup:
    """A subgroup of a parent Group, stored as sorted member indices."""

    def __init__(self, parent: Group, indices: np.ndarray, gens: list[int] | None = None):
        self.parent = parent
        self.indices = np.sort(np.asarray(indices, dtype=np.int64))
        self._gens = gens
        self._mask: np.ndarray | None = None

    @property
    def order(self) -> int:
        return len(self.indices)

    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.parent.order, dtype=bool)
            m[self.indices] = True
            self._mask = m
        return self._mask

    def contains_idx(self, i: int) -> bool:
        return bool(self.mask()[i])

    def __contains__(self, perm) -> bool:
        try:
            return self.contains_idx(self.parent.index_of(perm))
        except ElementNotInGroup:
            return False

    def ensure_gens(self) -> list[int]:
        if self._gens is None:
            self._gens = self.parent._greedy_gen_indices(self.indices)
        return self._gens

    def generators(self) -> list[Perm]:
        return [self.parent.element(i) for i in self.ensure_gens()]

    def elements(self) -> Iterator[Perm]:
        for i in self.indices:
            yield self.parent.element(int(i))

    def as_group(self, name: str | None = None) -> Group:
        rows = self.parent._rows[self.indices]
        gen_rows = [self.parent._rows[i] for i in self.ensure_gens()]
        label = name if name is not None else f"{self.parent.name}|sub{self.order}"
        return Group(rows.copy(), gen_rows, label)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and np.array_equal(other.indices, self.indices)
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


class QuotientMap:
    """Projection G -> G/K for the coset-action quotient."""

    def __init__(
        self,
        parent: Group,
        kernel: Subgroup,
        quotient: Group,
        coset_id: np.ndarray,
        coset_reps: np.ndarray,
    ):
        self.parent = parent
        self.kernel = kernel
        self.quotient = quotient
        self.coset_id = coset_id
        self.coset_reps = coset_reps
        self._coset_elem: np.ndarray | None = None

    def _coset_to_element(self) -> np.ndarray:
        # The projection factors through cosets; tabulate coset -> quotient index.
        if self._coset_elem is None:
            g = self.parent
            q = self.quotient
            rep_rows = g._rows[self.coset_reps].astype(np.int64)
            out = np.empty(len(self.coset_reps), dtype=np.int64)
            for c, rep in enumerate(self.coset_reps):
                xrow = g._rows[rep].astype(np.int64)
                prod = xrow[rep_rows]
                qrow = self.coset_id[g._indices_of_rows(prod)].astype(q._rows.dtype)
                out[c] = q._index[qrow.tobytes()]
            self._coset_elem = out
        return self._coset_elem

    def image_idx(self, i: int) -> int:
        return int(self._coset_to_element()[self.coset_id[i]])

    def image_indices(self, indices: np.ndarray) -> np.ndarray:
        """Sorted quotient indices of the image of a member-index set."""
        cosets = np.unique(self.coset_id[indices])
        return np.unique(self._coset_to_element()[cosets])

    def image(self, perm: Perm) -> Perm:
        return self.quotient.element(self.image_idx(self.parent.index_of(perm)))


# ----- module-level constructors -------------------------------------------------


def group_from_generators(
    degree: int,
    generators: Iterable,
    cap: int | None = None,
    name: str = "group",
) -> Group:
    """Enumerate the group generated by the given permutations.

    Breadth-first right-multiplication closure from the identity; raises
    CapExceeded as soon as the element count would pass the cap.
    """
    if cap is None:
        cap = default_element_cap()
    if degree < 1:
        raise InvalidPermutation("degree must be at least 1")
    dtype = _images_dtype(degree)
    gen_rows = [_as_image_row(g, degree, dtype) for g in generators]
    ident = np.arange(degree, dtype=dtype)
    rows: list[np.ndarray] = [ident]
    index: dict[bytes, int] = {ident.tobytes(): 0}
    frontier = [0]
    while frontier:
        fresh: list[int] = []
        cur = np.stack([rows[i] for i in frontier])
        for g in gen_rows:
            prod = g.astype(np.int64)[cur]
            for row in prod.astype(dtype):
                key = row.tobytes()
                if key not in index:
                    if len(rows) >= cap:
                        raise CapExceeded(
                            f"{name}: enumeration passed the element cap of {cap}"
                        )
                    index[key] = len(rows)
                    rows.append(row)
                    fresh.append(index[key])
        frontier = fresh
    return Group(np.stack(rows), gen_rows, name)


def trivial_group(degree: int = 1, name: str = "trivial") -> Group:
    return group_from_generators(degree, [], name=name)


def direct_product(a: Group, b: Group, cap: int | None = None, name: str | None = None) -> Group:
    """External direct product acting on the disjoint union of the point sets."""
    if cap is None:
        cap = default_element_cap()
    order = a.order * b.order
    if order > cap:
        raise CapExceeded(f"direct product order {order} passes the element cap {cap}")
    degree = a.degree + b.degree
    dtype = _images_dtype(degree)
    left = np.repeat(a._rows.astype(dtype), b.order, axis=0)
    right = np.tile(b._rows.astype(dtype) + a.degree, (a.order, 1))
    rows = np.hstack([left, right])
    gen_rows = []
    for g in a._gen_idx:
        row = np.concatenate(
            [a._rows[g].astype(dtype), np.arange(a.degree, degree, dtype=dtype)]
        )
        gen_rows.append(row)
    for g in b._gen_idx:
        row = np.concatenate(
            [np.arange(a.degree, dtype=dtype), b._rows[g].astype(dtype) + a.degree]
        )
        gen_rows.append(row)
    label = name if name is not None else f"{a.name} x {b.name}"
    return Group(rows, gen_rows, label)


def is_internal_direct_product(g: Group, a: Subgroup, b: Subgroup) -> bool:
    """True iff a and b are normal, intersect trivially and cover g by order.

    Those three conditions force g = ab with a and b commuting elementwise;
    the commuting consequence is asserted on generators.
    """
    for s in (a, b):
        if s.parent is not g:
            raise NotASubgroup("subgroup belongs to a different group")
    if a.order * b.order != g.order:
        return False
    if len(np.intersect1d(a.indices, b.indices)) != 1:
        return False
    if not (g.is_normal(a) and g.is_normal(b)):
        return False
    for i in a.ensure_gens():
        for j in b.ensure_gens():
            assert g.mult_idx(i, j) == g.mult_idx(j, i), "direct factors fail to commute"
    return True
