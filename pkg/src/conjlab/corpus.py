"""Builtin group families, spec strings, and persistent scan records.

A GroupSpec names a constructible group: a parametrized family member
(cyclic:12, frobenius:5,4), a disjoint-support product of such
(direct:frobenius:5,4+heisenberg:3), or a .grp file (file:groups/x.grp).
The canonical name of a spec is exactly its spec string, so parse and name
round-trip.  builtin_corpus() fixes the group list that scans and the
acceptance suite run over.

ScanRecord pairs a spec with its verification report; records serialize
one-per-line as JSONL with sorted keys, and read_records reports the line
number of any malformed line.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import gcd

import numpy as np

from .arith import divisibility_digraph, is_disconnected, is_prime
from .errors import InvalidSpec, RecordFormatError
from .group import Group, default_element_cap, direct_product, group_from_generators
from .grpio import load_grp
from .perm import Perm
from .theorem import TheoremReport

ENGINE_VERSION = "0.1.0"

_SIMPLE_KINDS = {
    "cyclic": 1,
    "dihedral": 1,
    "symmetric": 1,
    "alternating": 1,
    "heisenberg": 1,
    "frobenius": 2,
}


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple = ()
    parts: tuple = ()
    path: str = ""

    @property
    def name(self) -> str:
        if self.kind == "direct":
            return "direct:" + "+".join(p.name for p in self.parts)
        if self.kind == "file":
            return f"file:{self.path}"
        return f"{self.kind}:{','.join(str(v) for v in self.params)}"

    def __str__(self) -> str:
        return self.name


def _validate(spec: GroupSpec) -> None:
    kind, params = spec.kind, spec.params
    if kind == "direct":
        if len(spec.parts) < 2:
            raise InvalidSpec("direct product needs at least two parts")
        for part in spec.parts:
            _validate(part)
        return
    if kind == "file":
        if not spec.path:
            raise InvalidSpec("file spec needs a path")
        return
    if kind not in _SIMPLE_KINDS:
        raise InvalidSpec(f"unknown group kind {kind!r}")
    if len(params) != _SIMPLE_KINDS[kind]:
        raise InvalidSpec(
            f"{kind} takes {_SIMPLE_KINDS[kind]} parameter(s), got {len(params)}"
        )
    if any(v < 1 for v in params):
        raise InvalidSpec(f"{spec.name}: parameters must be positive")
    if kind == "dihedral" and params[0] < 3:
        raise InvalidSpec("dihedral needs n >= 3")
    if kind == "heisenberg":
        p = params[0]
        if p == 2 or not is_prime(p):
            raise InvalidSpec("heisenberg needs an odd prime")
    if kind == "frobenius":
        p, q = params
        if not is_prime(p):
            raise InvalidSpec("frobenius needs p prime")
        if q < 2 or (p - 1) % q != 0:
            raise InvalidSpec("frobenius needs q >= 2 dividing p - 1")


def parse_spec(text: str) -> GroupSpec:
    """Parse a spec string; the result's name reproduces the input."""
    text = text.strip()
    if not text:
        raise InvalidSpec("empty group spec")
    kind, _, rest = text.partition(":")
    if kind == "file":
        spec = GroupSpec("file", path=rest)
        _validate(spec)
        return spec
    if kind == "direct":
        if not rest:
            raise InvalidSpec("direct product needs parts")
        parts = []
        for chunk in rest.split("+"):
            part = parse_spec(chunk)
            if part.kind == "direct":
                raise InvalidSpec("direct products do not nest")
            parts.append(part)
        spec = GroupSpec("direct", parts=tuple(parts))
        _validate(spec)
        return spec
    if kind not in _SIMPLE_KINDS:
        raise InvalidSpec(f"unknown group kind {kind!r}")
    if not rest:
        raise InvalidSpec(f"{kind} needs parameters")
    try:
        params = tuple(int(v) for v in rest.split(","))
    except ValueError:
        raise InvalidSpec(f"non-integer parameter in {text!r}") from None
    spec = GroupSpec(kind, params=params)
    _validate(spec)
    return spec


# ----- constructors ---------------------------------------------------------


def _cyclic_gens(n: int) -> tuple[int, list[Perm]]:
    return n, [Perm.from_cycles([tuple(range(n))], n)]


def _dihedral_gens(n: int) -> tuple[int, list[Perm]]:
    rot = Perm((np.arange(n) + 1) % n)
    flip = Perm((n - np.arange(n)) % n)
    return n, [rot, flip]


def _symmetric_gens(n: int) -> tuple[int, list[Perm]]:
    if n < 2:
        return max(n, 1), []
    gens = [Perm.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Perm.from_cycles([tuple(range(n))], n))
    return n, gens


def _alternating_gens(n: int) -> tuple[int, list[Perm]]:
    if n < 3:
        return max(n, 1), []
    gens = [Perm.from_cycles([(0, 1, 2)], n)]
    if n > 3:
        if n % 2 == 1:
            gens.append(Perm.from_cycles([tuple(range(n))], n))
        else:
            gens.append(Perm.from_cycles([tuple(range(1, n))], n))
    return n, gens


def _heisenberg_gens(p: int) -> tuple[int, list[Perm]]:
    # elements are triples (a, b, c) mod p at index a*p^2 + b*p + c, with
    # (a1,b1,c1)*(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2); generators act by
    # right multiplication on the element list (the regular representation)
    n = p**3
    i = np.arange(n)
    a, rem = np.divmod(i, p * p)
    b, c = np.divmod(rem, p)

    def right_mult(ga: int, gb: int, gc: int) -> Perm:
        return Perm(
            ((a + ga) % p) * p * p + ((b + gb) % p) * p + (c + gc + a * gb) % p
        )

    return n, [right_mult(1, 0, 0), right_mult(0, 1, 0)]


def _multiplicative_order(x: int, p: int) -> int:
    k, acc = 1, x % p
    while acc != 1:
        acc = acc * x % p
        k += 1
    return k


def _frobenius_gens(p: int, q: int) -> tuple[int, list[Perm]]:
    # translation plus the smallest multiplier of exact order q mod p
    m = next(x for x in range(2, p) if _multiplicative_order(x, p) == q)
    shift = Perm((np.arange(p) + 1) % p)
    scale = Perm(np.arange(p) * m % p)
    return p, [shift, scale]


def build(spec: GroupSpec, cap: int | None = None) -> Group:
    """Construct the group a spec names; enumeration respects the cap."""
    _validate(spec)
    if cap is None:
        cap = default_element_cap()
    if spec.kind == "file":
        return load_grp(spec.path, cap=cap)
    if spec.kind == "direct":
        g = build(spec.parts[0], cap=cap)
        for part in spec.parts[1:]:
            g = direct_product(g, build(part, cap=cap), cap=cap)
        g.name = spec.name
        return g
    builder = {
        "cyclic": _cyclic_gens,
        "dihedral": _dihedral_gens,
        "symmetric": _symmetric_gens,
        "alternating": _alternating_gens,
        "heisenberg": _heisenberg_gens,
        "frobenius": _frobenius_gens,
    }[spec.kind]
    degree, gens = builder(*spec.params)
    return group_from_generators(degree, gens, cap=cap, name=spec.name)


# ----- the builtin corpus -----------------------------------------------------

_PRODUCT_FIRST_FACTORS = ("frobenius:5,4", "frobenius:7,3", "alternating:5")
_CYCLIC_PICKS = (2, 3, 7, 11)

# class-size sets of the first factors, frozen from the engine and re-checked
# by the test suite before use
_FIRST_FACTOR_SIZES = {
    "frobenius:5,4": frozenset({1, 4, 5}),
    "frobenius:7,3": frozenset({1, 3, 7}),
    "alternating:5": frozenset({1, 12, 15, 20}),
}
_FIRST_FACTOR_ORDERS = {
    "frobenius:5,4": 20,
    "frobenius:7,3": 21,
    "alternating:5": 60,
}


def builtin_corpus() -> list[GroupSpec]:
    """The fixed spec list that scans and the acceptance suite run over.

    Small families cover cyclic and dihedral groups through order 40, the
    small symmetric/alternating groups, two extraspecial groups and four
    Frobenius groups.  Products pair the nonabelian first factors with
    second factors meeting the coprimality hypothesis: an extraspecial
    group of order p^3 qualifies when p is coprime to every nontrivial
    class size of the first factor (and those sizes are disconnected), and
    cyclic picks qualify when their order is coprime to the factor's order.
    """
    specs = [parse_spec(f"cyclic:{n}") for n in range(1, 41)]
    specs += [parse_spec(f"dihedral:{n}") for n in range(3, 21)]
    specs += [parse_spec(s) for s in ("symmetric:3", "symmetric:4", "symmetric:5")]
    specs += [parse_spec(s) for s in ("alternating:4", "alternating:5")]
    specs += [parse_spec(s) for s in ("heisenberg:3", "heisenberg:7")]
    specs += [
        parse_spec(s)
        for s in ("frobenius:5,4", "frobenius:7,3", "frobenius:7,6", "frobenius:13,3")
    ]
    for first in _PRODUCT_FIRST_FACTORS:
        sizes = _FIRST_FACTOR_SIZES[first] - {1}
        for p in (3, 7):
            if all(gcd(p, a) == 1 for a in sizes) and is_disconnected(
                divisibility_digraph(sizes)
            ):
                specs.append(parse_spec(f"direct:{first}+heisenberg:{p}"))
        for q in _CYCLIC_PICKS:
            if gcd(q, _FIRST_FACTOR_ORDERS[first]) == 1:
                specs.append(parse_spec(f"direct:{first}+cyclic:{q}"))
    return specs


# ----- scan records ------------------------------------------------------------


@dataclass
class ScanRecord:
    """One scanned group: its spec, report (or error), and provenance."""

    spec: str
    report: TheoremReport | None
    engine_version: str = ENGINE_VERSION
    timestamp: str = ""
    error: str = ""

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "report": self.report.to_dict() if self.report is not None else None,
            "engine_version": self.engine_version,
            "timestamp": self.timestamp,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRecord":
        report = d["report"]
        return cls(
            spec=d["spec"],
            report=TheoremReport.from_dict(report) if report is not None else None,
            engine_version=d["engine_version"],
            timestamp=d["timestamp"],
            error=d.get("error", ""),
        )


def record_to_line(rec: ScanRecord) -> str:
    return json.dumps(rec.to_dict(), sort_keys=True, separators=(",", ":"))


def write_records(path: str | os.PathLike, records: list[ScanRecord]) -> None:
    """Write records as JSONL, one complete line per record."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_to_line(rec) + "\n")
            fh.flush()


def read_records(path: str | os.PathLike) -> list[ScanRecord]:
    """Read JSONL records; a malformed line fails with its line number."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                out.append(ScanRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise RecordFormatError(f"{os.fspath(path)}:{lineno}: {exc}") from None
    return out
