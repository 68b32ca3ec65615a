"""Counterexample search for claims kept outside the property catalog.

Two statements are searched rather than asserted:

* C1: the iterated reciprocal adherence equals the union of the
  iterated adherence and iterated dual adherence at every depth.  The
  depth-1 case is a theorem (property P9), but from depth 2 on the
  cross terms between the two directions are lost, and small spaces
  falsify the identity; the search finds the least one.
* C2: every space has the sandwich property.  False as well; the least
  space whose closure overshoots an enclosure is reported.

Found witnesses are rebuilt and confirmed through the public operators
before being returned.
"""

from __future__ import annotations

import numpy as np

from .. import _kernels as k
from .. import calculus, connectivity
from .._bitops import canonical_key
from ..errors import SpaceError
from ..outcome import CheckOutcome, Witness
from ..pointset import PointSet
from ..space import Space, r_modification, star_dual
from .generators import enumerate_spaces
from .tables import rows_array

CLAIM_IDS = ("C1", "C2")


def _c1_violation(space: Space) -> tuple[int, int] | None:
    """Least (mask, depth) where the iterated identity breaks, or None."""
    rows = rows_array(space)
    rev = k.reverse_rows(rows)
    fwd_table = k.or_table(rows)
    dual_table = k.or_table(rev)
    recip_table = k.or_table(rows | rev)
    masks = np.arange(1 << space.n, dtype=np.uint64)
    fwd, dual, recip = masks, masks, masks
    best: tuple[int, int] | None = None
    for depth in range(1, space.n + 2):
        fwd = fwd_table[fwd.astype(np.int64)]
        dual = dual_table[dual.astype(np.int64)]
        recip_next = recip_table[recip.astype(np.int64)]
        if depth >= 2:
            hits = np.nonzero(recip_next != (fwd | dual))[0]
            if hits.size:
                m = min((int(h) for h in hits), key=canonical_key)
                if best is None or canonical_key(m) < canonical_key(best[0]):
                    best = (m, depth)
        if (recip_next == recip).all() and depth >= 2:
            break
        recip = recip_next
    return best


def _c1_outcome(space: Space, mask: int, depth: int) -> CheckOutcome:
    a = PointSet(space.n, mask)
    lhs = calculus.iterated_adh(r_modification(space), a, depth)
    rhs = calculus.iterated_adh(space, a, depth) | calculus.iterated_adh(
        star_dual(space), a, depth
    )
    if lhs == rhs:
        raise RuntimeError("C1: table search hit does not reproduce through the operators")
    witness = Witness(
        space,
        sets=(("A", a), ("lhs", lhs), ("rhs", rhs)),
        params=(("k", depth),),
        note="iterated reciprocal adherence exceeds the union of the one-sided iterates",
    )
    return CheckOutcome("C1", False, witness)


def _c2_outcome(space: Space) -> CheckOutcome | None:
    result = connectivity.has_sandwich_property(space)
    if result.passed:
        return None
    witness = result.witness
    assert witness is not None
    return CheckOutcome("C2", False, witness)


def _c2_fast_hit(space: Space) -> bool:
    rows = rows_array(space)
    rev = k.reverse_rows(rows)
    enc = k.or_table(rows) | k.or_table(rev)
    cl = k.or_table(k.transitive_closure(rows))
    conn = k.conn_table(rows | rev)
    masks = np.arange(1 << space.n, dtype=np.uint64)
    overshoot = conn & (masks != np.uint64(0)) & ((cl & ~enc) != np.uint64(0))
    return bool(overshoot.any())


def search_counterexample(
    claim: str, max_n: int, budget: int | None = None
) -> CheckOutcome | None:
    """Scan enumeration order for the first space falsifying the claim.

    ``budget`` caps the number of spaces examined; None means all
    spaces up to ``max_n`` points.
    """
    if claim not in CLAIM_IDS:
        raise SpaceError(f"unknown claim id {claim!r}; known: {', '.join(CLAIM_IDS)}")
    examined = 0
    for n in range(max_n + 1):
        for space in enumerate_spaces(n):
            if budget is not None and examined >= budget:
                return None
            examined += 1
            if claim == "C1":
                hit = _c1_violation(space)
                if hit is not None:
                    return _c1_outcome(space, hit[0], hit[1])
            else:
                if _c2_fast_hit(space):
                    outcome = _c2_outcome(space)
                    if outcome is None:
                        raise RuntimeError(
                            "C2: table scan flagged a space the operators declare fine"
                        )
                    return outcome
    return None


def replay_claim(outcome: CheckOutcome) -> bool:
    """Reproduce a claim counterexample through the public operators only."""
    if outcome.passed or outcome.witness is None:
        raise SpaceError("only failed outcomes carry a witness to replay")
    w = outcome.witness
    space = w.space
    if outcome.check == "C1":
        a = w.set_named("A")
        depth = w.param_named("k")
        lhs = calculus.iterated_adh(r_modification(space), a, depth)
        rhs = calculus.iterated_adh(space, a, depth) | calculus.iterated_adh(
            star_dual(space), a, depth
        )
        return lhs != rhs and lhs == w.set_named("lhs") and rhs == w.set_named("rhs")
    if outcome.check == "C2":
        a = w.set_named("A")
        b = w.set_named("B")
        return (
            connectivity.is_connected_subset(space, a)
            and a <= b
            and b <= calculus.closure(space, a)
            and not connectivity.is_connected_subset(space, b)
        )
    raise SpaceError(f"unknown claim id {outcome.check!r}")
