"""The property catalog: twenty machine-checked statements.

Each property quantifies one statement over all subsets (or subset
pairs, or iteration depths) of a given space.  Checks run vectorized
over the operator tables; every reported counterexample is replayed
through the plain public operators before it is emitted, so a witness
that does not reproduce is an engine bug and raises instead of being
reported.

Witness selection is canonical: sets are ordered by size then mask
value, tuples lexicographically in quantifier order, so reports are
reproducible regardless of how the scan is executed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import _kernels as k
from .. import calculus, connectivity, oracle, tsubspace
from .._bitops import canonical_key, supersets_within
from ..errors import CapacityError, SpaceError
from ..outcome import CheckOutcome, Witness
from ..pointset import PointSet
from ..space import Space, make_space, product, r_modification, subspace, t_modification
from .tables import SpaceTables, TABLES_MAX_N, rows_array

_U0 = np.uint64(0)


@dataclass(frozen=True)
class Violation:
    sets: tuple[tuple[str, int], ...] = ()
    params: tuple[tuple[str, int], ...] = ()
    note: str = ""


@dataclass(frozen=True)
class PropertySpec:
    pid: str
    name: str
    summary: str
    check: Callable[[Space, SpaceTables], Violation | None]
    replay: Callable[[Space, Witness], bool]


def _least(viol: np.ndarray) -> int | None:
    """Least violating mask of a mask-indexed boolean vector."""
    if not viol.any():
        return None
    hits = np.nonzero(viol)[0]
    return min((int(m) for m in hits), key=canonical_key)


def _least_pair(viol: np.ndarray, row_masks: np.ndarray | None = None) -> tuple[int, int] | None:
    """Least violating (mask, mask) pair; axis 0 may carry remapped masks."""
    if not viol.any():
        return None
    hits = np.argwhere(viol)
    pairs = (
        ((int(i), int(j)) for i, j in hits)
        if row_masks is None
        else ((int(row_masks[i]), int(j)) for i, j in hits)
    )
    return min(pairs, key=lambda ij: (canonical_key(ij[0]), canonical_key(ij[1])))


def _conn(space: Space, mask: int) -> bool:
    return connectivity.is_connected_subset(space, PointSet(space.n, mask))


# ---------------------------------------------------------------- P1

def _check_p1(space: Space, t: SpaceTables) -> Violation | None:
    m = _least(t.conn != t.conn_clopen)
    if m is None:
        return None
    return Violation(sets=(("A", m),), note="graph and clopen connectivity disagree")


def _replay_p1(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return connectivity.is_connected_subset(space, a) != oracle.connected_by_clopen(space, a)


# ---------------------------------------------------------------- P2

def _check_p2(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    rows = np.nonzero(t.conn)[0]
    inside_adh = (g.masks[None, :] & ~t.adh[rows][:, None]) == _U0
    cond = g.sub[rows] & inside_adh & ~t.conn[None, :]
    pair = _least_pair(cond, rows)
    if pair is None:
        return None
    return Violation(
        sets=(("A", pair[0]), ("B", pair[1])),
        note="B sits between connected A and its adherence yet is disconnected",
    )


def _replay_p2(space: Space, w: Witness) -> bool:
    a, b = w.set_named("A"), w.set_named("B")
    return (
        connectivity.is_connected_subset(space, a)
        and a <= b
        and b <= calculus.adh(space, a)
        and not connectivity.is_connected_subset(space, b)
    )


# ---------------------------------------------------------------- P3

def _check_p3(space: Space, t: SpaceTables) -> Violation | None:
    m = _least(t.conn & ~t.conn[t.cl.astype(np.int64)])
    if m is None:
        return None
    return Violation(sets=(("A", m),), note="closure of connected A is disconnected")


def _replay_p3(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return connectivity.is_connected_subset(space, a) and not connectivity.is_connected_subset(
        space, calculus.closure(space, a)
    )


# ---------------------------------------------------------------- P4

def _check_p4(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    cond = (
        t.conn[:, None]
        & t.conn[None, :]
        & (g.inter != _U0)
        & ~t.conn[g.union_idx]
    )
    pair = _least_pair(cond)
    if pair is None:
        return None
    return Violation(
        sets=(("A", pair[0]), ("B", pair[1])),
        note="connected overlapping A and B have a disconnected union",
    )


def _replay_p4(space: Space, w: Witness) -> bool:
    a, b = w.set_named("A"), w.set_named("B")
    return (
        connectivity.is_connected_subset(space, a)
        and connectivity.is_connected_subset(space, b)
        and (a & b).mask != 0
        and not connectivity.is_connected_subset(space, a | b)
    )


# ---------------------------------------------------------------- P5

def _check_p5(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    cur = g.masks
    best = None
    for step in range(1, space.n + 2):
        nxt = t.adh[cur.astype(np.int64)]
        m = _least(t.conn & ~t.conn[nxt.astype(np.int64)])
        if m is not None and (best is None or canonical_key(m) < canonical_key(best[0])):
            best = (m, step)
        if (nxt == cur).all():
            break
        cur = nxt
    if best is None:
        return None
    return Violation(
        sets=(("A", best[0]),),
        params=(("k", best[1]),),
        note="iterated adherence of connected A is disconnected",
    )


def _replay_p5(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return connectivity.is_connected_subset(space, a) and not connectivity.is_connected_subset(
        space, calculus.iterated_adh(space, a, w.param_named("k"))
    )


# ---------------------------------------------------------------- P6

def _check_p6(space: Space, t: SpaceTables) -> Violation | None:
    if not bool((t.rows == t.tc).all()):
        return None
    m = _least(t.conn != t.tconn)
    if m is None:
        return None
    return Violation(
        sets=(("A", m),),
        note="defect at most 1 but plain and T-modified connectivity differ",
    )


def _replay_p6(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return calculus.topological_defect(space).defect <= 1 and connectivity.is_connected_subset(
        space, a
    ) != connectivity.is_connected_subset(t_modification(space), a)


# ---------------------------------------------------------------- P7

def _check_p7(space: Space, t: SpaceTables) -> Violation | None:
    sym_again = t.sym | k.reverse_rows(t.sym)
    if not bool((sym_again == t.sym).all()):
        return Violation(params=(("clause", 1),), note="reciprocal modification not idempotent")
    m = _least(~t.r_commute)
    if m is not None:
        return Violation(
            sets=(("A", m),),
            params=(("clause", 2),),
            note="reciprocal modification does not commute with this subspace",
        )
    g = t.grids
    clopen = (t.adh == g.masks) & (t.adh_star == g.masks)
    r_clopen = t.radh == g.masks
    m = _least(clopen != r_clopen)
    if m is not None:
        return Violation(
            sets=(("A", m),),
            params=(("clause", 3),),
            note="clopen sets of the space and its reciprocal modification differ",
        )
    return None


def _replay_p7(space: Space, w: Witness) -> bool:
    clause = w.param_named("clause")
    r_space = r_modification(space)
    if clause == 1:
        return r_modification(r_space) != r_space
    a = w.set_named("A")
    if clause == 2:
        return subspace(r_space, a) != r_modification(subspace(space, a))
    return calculus.is_clopen(space, a) != calculus.is_clopen(r_space, a)


# ---------------------------------------------------------------- P8

def _check_p8(space: Space, t: SpaceTables) -> Violation | None:
    r_und = t.sym | k.reverse_rows(t.sym)
    r_conn = k.conn_table(r_und)
    m = _least(t.conn != r_conn)
    if m is None:
        return None
    return Violation(
        sets=(("A", m),),
        note="connectivity differs between the space and its reciprocal modification",
    )


def _replay_p8(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return connectivity.is_connected_subset(space, a) != connectivity.is_connected_subset(
        r_modification(space), a
    )


# ---------------------------------------------------------------- P9

def _check_p9(space: Space, t: SpaceTables) -> Violation | None:
    m = _least(t.radh != (t.adh | t.adh_star))
    if m is None:
        return None
    return Violation(
        sets=(("A", m),),
        note="reciprocal adherence differs from the union of adherence and dual adherence",
    )


def _replay_p9(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return calculus.adh(r_modification(space), a) != (
        calculus.adh(space, a) | calculus.adh_star(space, a)
    )


# ---------------------------------------------------------------- P10

def _check_p10(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    meets_fwd = (g.masks[None, :] & t.adh[:, None]) != _U0
    meets_dual = (g.masks[:, None] & t.adh_star[None, :]) != _U0
    pair = _least_pair(meets_fwd != meets_dual)
    if pair is None:
        return None
    return Violation(
        sets=(("A", pair[0]), ("B", pair[1])),
        note="duality between adherence and dual adherence fails",
    )


def _replay_p10(space: Space, w: Witness) -> bool:
    a, b = w.set_named("A"), w.set_named("B")
    return ((b & calculus.adh(space, a)).mask != 0) != (
        (a & calculus.adh_star(space, b)).mask != 0
    )


# ---------------------------------------------------------------- P11

def _check_p11(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    pre = (g.masks != _U0) & t.conn
    m = _least(pre & ((t.adh | t.adh_star) != t.enclosure_by_definition))
    if m is None:
        return None
    return Violation(
        sets=(("A", m),),
        note="enclosure formula disagrees with its one-point-extension definition",
    )


def _replay_p11(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    if a.mask == 0 or not connectivity.is_connected_subset(space, a):
        return False
    by_def = a.mask
    for x in range(space.n):
        if connectivity.is_connected_subset(space, a.with_point(x)):
            by_def |= 1 << x
    return connectivity.enclosure(space, a).mask != by_def


# ---------------------------------------------------------------- P12

def _check_p12(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    rows = np.nonzero(t.conn & (g.masks != _U0))[0]
    # bad[A, S]: some B with A <= B <= S is disconnected (subset-lattice sweep)
    bad = g.sub[rows] & ~t.conn[None, :]
    for x in range(space.n):
        bad[:, g.bit_hi[x]] |= bad[:, g.bit_lo[x]]
    encloses_def = ~bad
    e_formula = (t.adh | t.adh_star)[rows]
    inside_e = (g.masks[None, :] & ~e_formula[:, None]) == _U0
    pair = _least_pair(g.sub[rows] & (encloses_def != inside_e), rows)
    if pair is None:
        return None
    return Violation(
        sets=(("A", pair[0]), ("S", pair[1])),
        note="enclosing by quantification disagrees with the enclosure bound",
    )


def _replay_p12(space: Space, w: Witness) -> bool:
    a, s = w.set_named("A"), w.set_named("S")
    if a.mask == 0 or not connectivity.is_connected_subset(space, a) or not a <= s:
        return False
    by_quantifier = all(
        connectivity.is_connected_subset(space, PointSet(space.n, b))
        for b in supersets_within(a.mask, s.mask)
    )
    return by_quantifier != (s <= connectivity.enclosure(space, a))


# ---------------------------------------------------------------- P13

def _check_p13(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    closed = t.adh == g.masks
    open_ = t.adh_star == g.masks
    m = _least((closed | open_) & ~t.tsub)
    if m is None:
        return None
    return Violation(sets=(("A", m),), note="a closed or open set fails to be a T-subspace")


def _replay_p13(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return (
        calculus.is_closed(space, a) or calculus.is_open(space, a)
    ) and not tsubspace.is_t_subspace(space, a)


# ---------------------------------------------------------------- P14

def _check_p14(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    gap = t.cl & ~t.adh
    best = None
    for x in range(space.n):
        premise = ((gap >> np.uint64(x)) & np.uint64(1)).astype(bool)
        m = _least(premise & t.tsub[g.with_bit_idx[:, x]])
        if m is not None and (best is None or (canonical_key(m), x) < (canonical_key(best[0]), best[1])):
            best = (m, x)
    if best is None:
        return None
    return Violation(
        sets=(("S", best[0]),),
        params=(("x", best[1]),),
        note="adding a closure-only point still yields a T-subspace",
    )


def _replay_p14(space: Space, w: Witness) -> bool:
    s = w.set_named("S")
    x = w.param_named("x")
    gap = calculus.closure(space, s) - calculus.adh(space, s)
    return x in gap and tsubspace.is_t_subspace(space, s.with_point(x))


# ---------------------------------------------------------------- P15

def _check_p15(space: Space, t: SpaceTables) -> Violation | None:
    defect_small = bool((t.rows == t.tc).all())
    all_tsub = bool(t.tsub.all())
    if defect_small == all_tsub:
        return None
    if defect_small:
        m = _least(~t.tsub)
        return Violation(
            sets=(("A", m),),
            note="defect at most 1 yet some subset is not a T-subspace",
        )
    x = int(np.nonzero(t.rows != t.tc)[0][0])
    return Violation(
        sets=(("A", 1 << x),),
        note="every subset is a T-subspace yet adherence misses closure at this point",
    )


def _replay_p15(space: Space, w: Witness) -> bool:
    defect_small = calculus.topological_defect(space).defect <= 1
    all_tsub = all(
        tsubspace.is_t_subspace(space, PointSet(space.n, m)) for m in range(1 << space.n)
    )
    return defect_small != all_tsub


# ---------------------------------------------------------------- P16

def _check_p16(space: Space, t: SpaceTables) -> Violation | None:
    best = _least(t.tsub != t.pathchar)
    if space.n <= 4:
        # cross-validate both kernel routes against the plain operators
        for m in range(1 << space.n):
            ps = PointSet(space.n, m)
            by_detector = tsubspace.is_t_subspace(space, ps)
            by_paths = tsubspace.t_subspace_defect_witness(space, ps) is None
            if by_detector != by_paths or by_detector != bool(t.tsub[m]):
                if best is None or canonical_key(m) < canonical_key(best):
                    best = m
    if best is None:
        return None
    return Violation(
        sets=(("A", best),),
        note="T-subspace detector and path characterization disagree",
    )


def _replay_p16(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return tsubspace.is_t_subspace(space, a) != (
        tsubspace.t_subspace_defect_witness(space, a) is None
    )


# ---------------------------------------------------------------- P17

def _check_p17(space: Space, t: SpaceTables) -> Violation | None:
    m = _least(t.tsub & (t.conn != t.tconn))
    if m is None:
        return None
    return Violation(
        sets=(("A", m),),
        note="a T-subspace distinguishes plain from T-modified connectivity",
    )


def _replay_p17(space: Space, w: Witness) -> bool:
    a = w.set_named("A")
    return tsubspace.is_t_subspace(space, a) and connectivity.is_connected_subset(
        space, a
    ) != connectivity.is_connected_subset(t_modification(space), a)


# ---------------------------------------------------------------- P18

_P18_CLAUSES: tuple[tuple[int, tuple[str, ...], str], ...] = (
    (1, ("xi",), "sw"),
    (2, ("sw",), "tconn"),
    (3, ("tsub", "tconn"), "xi"),
    (4, ("sw",), "rsw"),
    (5, ("tconn",), "trconn"),
    (6, ("xi",), "rsw"),
    (7, ("rsw",), "trconn"),
)


def _p18_flags_tables(t: SpaceTables) -> dict[str, np.ndarray]:
    return {
        "xi": t.conn,
        "sw": t.sandwiched,
        "tconn": t.tconn,
        "rsw": t.r_sandwiched,
        "trconn": t.trconn,
        "tsub": t.tsub,
    }


def _p18_flags_library(space: Space, b: PointSet) -> dict[str, bool]:
    r_space = r_modification(space)
    return {
        "xi": connectivity.is_connected_subset(space, b),
        "sw": connectivity.is_sandwiched(space, b) is not None,
        "tconn": connectivity.is_connected_subset(t_modification(space), b),
        "rsw": connectivity.is_sandwiched(r_space, b) is not None,
        "trconn": connectivity.is_connected_subset(t_modification(r_space), b),
        "tsub": tsubspace.is_t_subspace(space, b),
    }


def _check_p18(space: Space, t: SpaceTables) -> Violation | None:
    flags = _p18_flags_tables(t)
    for clause, premises, conclusion in _P18_CLAUSES:
        premise = flags[premises[0]]
        for name in premises[1:]:
            premise = premise & flags[name]
        m = _least(premise & ~flags[conclusion])
        if m is not None:
            return Violation(
                sets=(("B", m),),
                params=(("clause", clause),),
                note="an arrow of the sandwich implication diagram fails",
            )
    return None


def _replay_p18(space: Space, w: Witness) -> bool:
    flags = _p18_flags_library(space, w.set_named("B"))
    clause = w.param_named("clause")
    for cid, premises, conclusion in _P18_CLAUSES:
        if cid == clause:
            return all(flags[p] for p in premises) and not flags[conclusion]
    raise SpaceError(f"unknown diagram clause {clause}")


# ---------------------------------------------------------------- P19

def _check_p19(space: Space, t: SpaceTables) -> Violation | None:
    g = t.grids
    rows = np.nonzero(t.conn)[0]
    lower = g.masks[rows]
    best = None
    for depth in range(space.n + 2):
        upper = t.radh[lower.astype(np.int64)]
        above = (lower[:, None] & ~g.masks[None, :]) == _U0
        below = (g.masks[None, :] & ~upper[:, None]) == _U0
        pair = _least_pair(above & below & ~t.conn[None, :], rows)
        if pair is not None:
            key = (canonical_key(pair[0]), depth, canonical_key(pair[1]))
            if best is None or key < best[0]:
                best = (key, pair, depth)
        if (upper == lower).all():
            break
        lower = upper
    if best is None:
        return None
    _, pair, depth = best
    return Violation(
        sets=(("A", pair[0]), ("B", pair[1])),
        params=(("k", depth),),
        note="a set between consecutive reciprocal adherence iterates is disconnected",
    )


def _replay_p19(space: Space, w: Witness) -> bool:
    a, b = w.set_named("A"), w.set_named("B")
    depth = w.param_named("k")
    r_space = r_modification(space)
    lower = calculus.iterated_adh(r_space, a, depth)
    upper = calculus.iterated_adh(r_space, a, depth + 1)
    return (
        connectivity.is_connected_subset(space, a)
        and lower <= b
        and b <= upper
        and not connectivity.is_connected_subset(space, b)
    )


# ---------------------------------------------------------------- P20

def _default_partners() -> tuple[Space, ...]:
    return (
        make_space(["z"], []),
        make_space(["x", "y"], []),
        make_space(["0", "1"], [("0", "1")]),
    )


_PARTNERS = _default_partners()


def _check_p20(space: Space, t: SpaceTables) -> Violation | None:
    if space.n == 0:
        return None
    own_connected = bool(t.conn[(1 << space.n) - 1])
    candidates: list[tuple[int, Space]] = list(enumerate(_PARTNERS))
    if space.n * space.n <= 64:
        candidates.append((-1, space))
    for idx, partner in candidates:
        if space.n * partner.n > 64:
            continue
        prod = k.product_rows(t.rows, rows_array(partner))
        lhs = k.is_weakly_connected(prod | k.reverse_rows(prod))
        partner_connected = k.is_weakly_connected(
            rows_array(partner) | k.reverse_rows(rows_array(partner))
        )
        if bool(lhs) != (own_connected and bool(partner_connected)):
            return Violation(
                params=(("partner", idx),),
                note="product connectivity differs from the conjunction of factors",
            )
    return None


def _replay_p20(space: Space, w: Witness) -> bool:
    idx = w.param_named("partner")
    partner = space if idx < 0 else _PARTNERS[idx]
    prod = product(space, partner)
    return connectivity.is_connected(prod) != (
        connectivity.is_connected(space) and connectivity.is_connected(partner)
    )


# ---------------------------------------------------------------- catalog

CATALOG_VERSION = "1"

_SPECS = (
    PropertySpec("P1", "finiteconnected",
                 "weak graph connectivity matches clopen-based connectivity",
                 _check_p1, _replay_p1),
    PropertySpec("P2", "adh-sandwich",
                 "sets between a connected set and its adherence are connected",
                 _check_p2, _replay_p2),
    PropertySpec("P3", "closure-connected",
                 "the closure of a connected set is connected",
                 _check_p3, _replay_p3),
    PropertySpec("P4", "union-connected",
                 "overlapping connected sets have a connected union",
                 _check_p4, _replay_p4),
    PropertySpec("P5", "iterated-adh-connected",
                 "every adherence iterate of a connected set is connected",
                 _check_p5, _replay_p5),
    PropertySpec("P6", "defect1-connect",
                 "at defect 1, plain and T-modified subset connectivity coincide",
                 _check_p6, _replay_p6),
    PropertySpec("P7", "r-reflector",
                 "the reciprocal modification is idempotent, commutes with subspaces, keeps clopen sets",
                 _check_p7, _replay_p7),
    PropertySpec("P8", "r-connect",
                 "subset connectivity survives the reciprocal modification",
                 _check_p8, _replay_p8),
    PropertySpec("P9", "r-adh-base",
                 "reciprocal adherence is the union of adherence and dual adherence",
                 _check_p9, _replay_p9),
    PropertySpec("P10", "star-duality",
                 "meeting the adherence is symmetric between a set pair and its duals",
                 _check_p10, _replay_p10),
    PropertySpec("P11", "enclosure-theorem",
                 "the enclosure equals adherence united with dual adherence",
                 _check_p11, _replay_p11),
    PropertySpec("P12", "encloses-iff",
                 "enclosing is equivalent to lying inside the enclosure",
                 _check_p12, _replay_p12),
    PropertySpec("P13", "open-closed-T",
                 "closed or open sets are T-subspaces",
                 _check_p13, _replay_p13),
    PropertySpec("P14", "notTsub",
                 "adding a closure-only point breaks the T-subspace property",
                 _check_p14, _replay_p14),
    PropertySpec("P15", "allT-iff-defect1",
                 "all subsets are T-subspaces exactly at defect at most 1",
                 _check_p15, _replay_p15),
    PropertySpec("P16", "T-path-characterization",
                 "T-subspaces are the path-stable subsets",
                 _check_p16, _replay_p16),
    PropertySpec("P17", "Tsub-connect",
                 "on a T-subspace, plain and T-modified connectivity coincide",
                 _check_p17, _replay_p17),
    PropertySpec("P18", "sandwich-diagram",
                 "all arrows of the sandwich implication diagram hold",
                 _check_p18, _replay_p18),
    PropertySpec("P19", "sandwiched-between-r-adherences",
                 "sets between consecutive reciprocal adherence iterates are connected",
                 _check_p19, _replay_p19),
    PropertySpec("P20", "product-connected",
                 "a product is connected exactly when both factors are",
                 _check_p20, _replay_p20),
)

CATALOG: dict[str, PropertySpec] = {spec.pid: spec for spec in _SPECS}


def property_ids() -> tuple[str, ...]:
    return tuple(CATALOG)


def _witness_from_violation(space: Space, v: Violation) -> Witness:
    return Witness(
        space=space,
        sets=tuple((name, PointSet(space.n, mask)) for name, mask in v.sets),
        params=v.params,
        note=v.note,
    )


def check_with_tables(spec: PropertySpec, space: Space, tables: SpaceTables) -> CheckOutcome:
    violation = spec.check(space, tables)
    if violation is None:
        return CheckOutcome(spec.pid, True)
    witness = _witness_from_violation(space, violation)
    if not spec.replay(space, witness):
        raise RuntimeError(
            f"{spec.pid}: vectorized check found a counterexample the operators do not reproduce"
        )
    return CheckOutcome(spec.pid, False, witness)


def check_property(pid: str, space: Space) -> CheckOutcome:
    """Quantify one catalog property over all subsets of one space."""
    if pid not in CATALOG:
        raise SpaceError(f"unknown property id {pid!r}; known: {', '.join(CATALOG)}")
    if space.n > TABLES_MAX_N:
        raise CapacityError(f"property checks are capped at {TABLES_MAX_N} points")
    return check_with_tables(CATALOG[pid], space, SpaceTables(space))


def replay_outcome(outcome: CheckOutcome) -> bool:
    """Re-run a failed outcome's property on its own witness via the operators."""
    if outcome.passed or outcome.witness is None:
        raise SpaceError("only failed outcomes carry a witness to replay")
    spec = CATALOG.get(outcome.check)
    if spec is None:
        raise SpaceError(f"unknown property id {outcome.check!r}")
    return spec.replay(outcome.witness.space, outcome.witness)
