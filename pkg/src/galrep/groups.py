"""Metacyclic groups attached to the maximal-inertia setting, and their exact
character tables.

Two finite groups occur.  The inertia image is

    C_p x| C_{2(p-1)} = < s, t | s^p = t^{2(p-1)} = 1, t s t^-1 = s^b >

with b a primitive root mod p (we fix the smallest one; the choice only
relabels rows).  When the residue degree of the base field is odd, the
Galois image is the C_2-extension

    < s, t, f | ..., s f = f s, f t f = t^p >.

Elements are kept in the normal form s^i t^j f^k, so multiplication is three
modular additions with a twist:

    (i1,j1,k1)*(i2,j2,k2) = (i1 + b^j1 i2 mod p,  j1 + p^k1 j2 mod 2(p-1),  k1+k2 mod 2).

Character tables are built from the semidirect-product recipe for A x| H
with A abelian: pick orbit representatives of H on the characters of A; for
each, induce the stabilizer's irreducibles up from A*Stab.  Here the orbits
are just {trivial} and {everything else}, so the table splits into rows
lifted from the quotient by <s> and a few (p-1)-dimensional rows induced
from the centralizer of s.  For the extended group the same recipe is
applied once more to the quotient <t, f> to enumerate the lifted rows.  All
values are exact cyclotomics with conductor dividing 2p(p-1).

Tables are immutable after construction and cached per (p, variant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple

from .arith import is_odd_prime, legendre_symbol, smallest_primitive_root
from .cyclotomic import Cyclotomic
from .errors import InputError, InternalCheckError, UsageError

INERTIA = "inertia"
FULL = "full"

SUBGROUP_C2P = "C2p"  # <s, nu>, centralizer of s in the inertia group
SUBGROUP_CP_C2_C2 = "CpxC2xC2"  # <s, nu, f>, centralizer of s in the full group


class El(NamedTuple):
    """Group element in normal form s^i t^j f^k."""

    i: int
    j: int
    k: int


@dataclass(frozen=True)
class GroupSpec:
    p: int
    b: int
    variant: str

    @property
    def tau_order(self) -> int:
        return 2 * (self.p - 1)

    @property
    def order(self) -> int:
        n = self.p * self.tau_order
        return 2 * n if self.variant == FULL else n

    @cached_property
    def _b_powers(self) -> tuple[int, ...]:
        # b^j mod p for j = 0..2(p-1)-1; avoids pow() in multiplication
        out = [1]
        for _ in range(self.tau_order - 1):
            out.append(out[-1] * self.b % self.p)
        return tuple(out)

    def identity(self) -> El:
        return El(0, 0, 0)

    def element(self, i: int, j: int, k: int = 0) -> El:
        if k % 2 and self.variant != FULL:
            raise UsageError("bad_element", "inertia variant has no f component")
        return El(i % self.p, j % self.tau_order, k % 2)

    def mul(self, a: El, c: El) -> El:
        to = self.tau_order
        j2 = c.j * self.p if a.k else c.j
        return El(
            (a.i + self._b_powers[a.j] * c.i) % self.p,
            (a.j + j2) % to,
            (a.k + c.k) % 2,
        )

    def inv(self, a: El) -> El:
        to = self.tau_order
        j = (-a.j * (self.p if a.k else 1)) % to
        bpow = self._b_powers[(-a.j) % (self.p - 1)]
        return El((-a.i * bpow) % self.p, j, a.k)

    def conjugate(self, g: El, x: El) -> El:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def elements(self) -> Iterator[El]:
        kmax = 2 if self.variant == FULL else 1
        for i in range(self.p):
            for j in range(self.tau_order):
                for k in range(kmax):
                    yield El(i, j, k)

    def nu(self) -> El:
        """The central involution t^(p-1) of the tame part."""
        return El(0, self.p - 1, 0)


def build_group(p: int, variant: str = INERTIA, p_bound: int = 13) -> GroupSpec:
    """Group of the given variant with the smallest primitive root as b."""
    if variant not in (INERTIA, FULL):
        raise UsageError("bad_variant", f"unknown variant {variant!r}")
    if not is_odd_prime(p):
        raise InputError("p_not_odd_prime", f"p must be an odd prime, got {p}")
    if p > p_bound:
        raise InputError("p_beyond_bound", f"p = {p} exceeds the configured bound {p_bound}")
    return GroupSpec(p=p, b=smallest_primitive_root(p), variant=variant)


class ConjClass(NamedTuple):
    rep: El
    size: int


@lru_cache(maxsize=None)
def _classes_and_index(group: GroupSpec) -> tuple[tuple[ConjClass, ...], dict[El, int]]:
    all_elements = list(group.elements())
    seen: set[El] = set()
    classes: list[tuple[El, frozenset[El]]] = []
    for x in all_elements:
        if x in seen:
            continue
        orbit = {group.conjugate(g, x) for g in all_elements}
        seen |= orbit
        classes.append((min(orbit), frozenset(orbit)))
    classes.sort(key=lambda item: item[0])
    index: dict[El, int] = {}
    out = []
    for idx, (rep, orbit) in enumerate(classes):
        out.append(ConjClass(rep, len(orbit)))
        for member in orbit:
            index[member] = idx
    return tuple(out), index


def conjugacy_classes(group: GroupSpec) -> tuple[ConjClass, ...]:
    """Conjugacy classes by brute-force orbit enumeration, lex-least reps."""
    return _classes_and_index(group)[0]


@dataclass(frozen=True)
class CharacterRow:
    label: str
    dimension: int
    values: tuple[Cyclotomic, ...]  # one per conjugacy class
    faithful: bool
    construction: tuple  # ("lifted", ...) | ("induced", nu_sign, phi_sign)

    def construction_json(self) -> dict:
        if self.construction[0] == "induced":
            _, nu_sign, phi_sign = self.construction
            out = {"kind": "induced", "nu": nu_sign}
            if phi_sign is not None:
                out["phi"] = phi_sign
            return out
        return {"kind": "lifted", "detail": list(self.construction[1:])}

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "dimension": self.dimension,
            "faithful": self.faithful,
            "construction": self.construction_json(),
            "values": [v.to_json() for v in self.values],
        }


class CharacterTable:
    """Conjugacy classes plus exact character values for one group."""

    def __init__(self, group: GroupSpec, classes: tuple[ConjClass, ...],
                 class_index: dict[El, int], rows: tuple[CharacterRow, ...]):
        self.group = group
        self.classes = classes
        self._class_index = class_index
        self.rows = rows

    def class_of(self, element: El) -> int:
        return self._class_index[element]

    def value_at(self, row: CharacterRow, element: El) -> Cyclotomic:
        return row.values[self.class_of(element)]

    def row(self, label: str) -> CharacterRow:
        for row in self.rows:
            if row.label == label:
                return row
        raise UsageError("no_such_row", f"no row labelled {label!r}")

    def sigma_phi_class(self) -> int:
        """Index of the class of s*f (full variant only)."""
        if self.group.variant != FULL:
            raise UsageError("bad_variant", "s*f lives in the full variant")
        return self.class_of(El(1, 0, 1))

    def inner_product(self, r: CharacterRow, s: CharacterRow) -> Fraction:
        """|G| times the standard character inner product <r, s>, exact.

        Sums class_size * r(g) * conj(s(g)) with a single reduction at the
        common conductor; the result must be rational (it is |G| delta_rs
        for rows of the same table).
        """
        m = math.lcm(r.values[0].m, s.values[0].m)
        acc: dict[int, Fraction] = {}
        for cls, vr, vs in zip(self.classes, r.values, s.values):
            size = cls.size
            lift_r = m // vr.m
            lift_s = m // vs.m
            for e1, c1 in enumerate(vr.coeffs):
                if not c1:
                    continue
                for e2, c2 in enumerate(vs.coeffs):
                    if not c2:
                        continue
                    # conj(s(g)) contributes exponent -e2
                    e = (e1 * lift_r - e2 * lift_s) % m
                    c = size * c1 * c2
                    if e in acc:
                        acc[e] += c
                    else:
                        acc[e] = c
        total = Cyclotomic.from_terms(m, acc)
        return total.as_rational()

    def dimension_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for row in self.rows:
            out[row.dimension] = out.get(row.dimension, 0) + 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "p": self.group.p,
            "b": self.group.b,
            "variant": self.group.variant,
            "order": self.group.order,
            "classes": [{"rep": list(c.rep), "size": c.size} for c in self.classes],
            "rows": [row.to_json_dict() for row in self.rows],
        }


def gauss_sum(p: int) -> Cyclotomic:
    """Quadratic Gauss sum: sum over a of (a|p) zeta_p^a, exact in Q(zeta_p).

    Its square is (-1)^((p-1)/2) * p; under the numeric embedding it is the
    positive real square root of p for p = 1 mod 4 and i*sqrt(p) for
    p = 3 mod 4.
    """
    if not is_odd_prime(p):
        raise InputError("p_not_odd_prime", f"p must be an odd prime, got {p}")
    return Cyclotomic.from_terms(p, {a: legendre_symbol(a, p) for a in range(1, p)})


def _subgroup_membership(group: GroupSpec, subgroup: str):
    """Return (decompose, index) for the induction subgroup.

    decompose(El) -> (i, e, k) with the element written as s^i nu^e f^k, or
    None when the element lies outside the subgroup.
    """
    p = group.p
    if subgroup == SUBGROUP_C2P:
        if group.variant not in (INERTIA, FULL):
            raise UsageError("bad_subgroup", subgroup)

        def decompose(x: El):
            if x.k or x.j % (p - 1):
                return None
            return x.i, (x.j // (p - 1)) % 2, 0

    elif subgroup == SUBGROUP_CP_C2_C2:
        if group.variant != FULL:
            raise UsageError("bad_subgroup", f"{subgroup} requires the full variant")

        def decompose(x: El):
            if x.j % (p - 1):
                return None
            return x.i, (x.j // (p - 1)) % 2, x.k

    else:
        raise UsageError("bad_subgroup", f"unknown subgroup {subgroup!r}")
    return decompose


def induced_character(group: GroupSpec, subgroup: str, inner: dict[str, int]) -> tuple[Cyclotomic, ...]:
    """Class values of the induction to the group of s -> zeta_p times a sign
    character of the centralizer's 2-part.

    ``inner`` gives the sign character on the generators: {"nu": +-1} for the
    inertia variant, plus {"phi": +-1} for the full one.  Both subgroups are
    normal, so the value vanishes off the subgroup and is a plain sum over
    the coset representatives t^a, a = 1..p-1, otherwise.
    """
    p = group.p
    decompose = _subgroup_membership(group, subgroup)
    nu_sign = inner["nu"]
    phi_sign = inner.get("phi")
    if subgroup == SUBGROUP_CP_C2_C2 and phi_sign is None:
        raise UsageError("bad_subgroup", "full-variant induction needs a phi sign")
    classes = conjugacy_classes(group)
    reps = [group.element(0, a, 0) for a in range(1, p)]
    values = []
    for cls in classes:
        total: dict[int, Fraction] = {}
        for t in reps:
            u = group.conjugate(t, cls.rep)
            dec = decompose(u)
            if dec is None:
                continue
            i, e, k = dec
            sign = (nu_sign ** e) * (phi_sign ** k if k else 1)
            total[i] = total.get(i, Fraction(0)) + sign
        values.append(Cyclotomic.from_terms(p, total))
    return tuple(values)


def _kernel_size(group: GroupSpec, class_index: dict[El, int], values: tuple[Cyclotomic, ...],
                 dimension: int) -> int:
    target = Cyclotomic.rational(values[0].m, dimension)
    kernel_classes = {idx for idx, v in enumerate(values) if v == target}
    return sum(1 for element, idx in class_index.items() if idx in kernel_classes)


def faithful_kernel(group: GroupSpec, row: CharacterRow) -> int:
    """Number of elements where the character reaches its dimension."""
    _, class_index = _classes_and_index(group)
    return _kernel_size(group, class_index, row.values, row.dimension)


def _lifted_inertia_row(group: GroupSpec, classes, c: int) -> tuple[str, tuple[Cyclotomic, ...]]:
    to = group.tau_order
    values = tuple(Cyclotomic.root_of_unity(to, c * cls.rep.j) for cls in classes)
    return f"tame{c}", values


def _lifted_full_1d_row(group: GroupSpec, classes, c: int, phi_sign: int):
    to = group.tau_order
    values = []
    for cls in classes:
        v = Cyclotomic.root_of_unity(to, c * cls.rep.j)
        if cls.rep.k and phi_sign < 0:
            v = -v
        values.append(v)
    label = f"tame{c}{'+' if phi_sign > 0 else '-'}"
    return label, tuple(values)


def _lifted_full_2d_row(group: GroupSpec, classes, c: int):
    to = group.tau_order
    values = []
    for cls in classes:
        if cls.rep.k:
            values.append(Cyclotomic.zero(to))
        else:
            values.append(
                Cyclotomic.from_terms(to, _merge({c * cls.rep.j: 1}, {c * group.p * cls.rep.j: 1}, to))
            )
    return f"tame2d{c}", tuple(values)


def _merge(a: dict[int, int], b: dict[int, int], m: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for src in (a, b):
        for e, v in src.items():
            e %= m
            out[e] = out.get(e, Fraction(0)) + v
    return out


@lru_cache(maxsize=None)
def character_table(group: GroupSpec) -> CharacterTable:
    """Complete irreducible character table of either variant."""
    classes, class_index = _classes_and_index(group)
    p = group.p
    to = group.tau_order
    raw: list[tuple[str, int, tuple[Cyclotomic, ...], tuple]] = []

    if group.variant == INERTIA:
        for c in range(to):
            label, values = _lifted_inertia_row(group, classes, c)
            raw.append((label, 1, values, ("lifted", c)))
        for nu_sign, tag in ((1, "wild+"), (-1, "wild-")):
            values = induced_character(group, SUBGROUP_C2P, {"nu": nu_sign})
            raw.append((tag, p - 1, values, ("induced", nu_sign, None)))
    else:
        # rows factoring through the quotient <t, f>: the f-action t -> t^p
        # fixes exactly the even characters of <t> and pairs up the odd ones
        for c in range(0, to, 2):
            for phi_sign in (1, -1):
                label, values = _lifted_full_1d_row(group, classes, c, phi_sign)
                raw.append((label, 1, values, ("lifted", c, phi_sign)))
        seen: set[int] = set()
        for c in range(1, to, 2):
            if c in seen:
                continue
            partner = c * p % to
            seen |= {c, partner}
            label, values = _lifted_full_2d_row(group, classes, min(c, partner))
            raw.append((label, 2, values, ("lifted", min(c, partner), "pair")))
        for nu_sign in (1, -1):
            for phi_sign in (1, -1):
                tag = f"wild{'+' if nu_sign > 0 else '-'}{'+' if phi_sign > 0 else '-'}"
                values = induced_character(group, SUBGROUP_CP_C2_C2, {"nu": nu_sign, "phi": phi_sign})
                raw.append((tag, p - 1, values, ("induced", nu_sign, phi_sign)))

    rows = []
    for label, dim, values, construction in raw:
        kernel = _kernel_size(group, class_index, values, dim)
        rows.append(CharacterRow(label, dim, values, kernel == 1, construction))
    rows.sort(key=lambda r: (r.dimension, r.label))
    if len(rows) != len(classes):
        raise InternalCheckError(
            f"row count {len(rows)} != class count {len(classes)} for p={p} {group.variant}"
        )
    if sum(r.dimension**2 for r in rows) != group.order:
        raise InternalCheckError(f"sum of squared dimensions != group order for p={p} {group.variant}")
    return CharacterTable(group, classes, class_index, tuple(rows))


def identify_psi(p: int, n_parity: str, p_bound: int = 13) -> CharacterRow:
    """Pick the finite-group factor of the Galois representation.

    Even residue degree: the unique faithful (p-1)-dimensional row of the
    inertia table.  Odd: the faithful (p-1)-dimensional row of the full
    table whose value on the class of s*f is minus the Gauss sum.  Selection
    is by exact cyclotomic comparison; anything but a unique match means the
    construction itself is broken.
    """
    if n_parity not in ("even", "odd"):
        raise UsageError("bad_parity", f"parity must be 'even' or 'odd', got {n_parity!r}")
    variant = INERTIA if n_parity == "even" else FULL
    table = character_table(build_group(p, variant, p_bound))
    candidates = [row for row in table.rows if row.faithful and row.dimension == p - 1]
    if n_parity == "odd":
        target = -gauss_sum(p)
        idx = table.sigma_phi_class()
        candidates = [row for row in candidates if row.values[idx] == target]
    if len(candidates) != 1:
        raise InternalCheckError(
            f"expected exactly one candidate for psi (p={p}, {n_parity}), found {len(candidates)}"
        )
    return candidates[0]
