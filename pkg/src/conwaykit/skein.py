"""Conway polynomials by the descending-diagram skein recursion.

The algorithm evaluates nabla(L+) - nabla(L-) = z nabla(L0) with a
deterministic crossing choice.  A diagram is first R1/R2-reduced; a split
diagram contributes 0 and a lone circle contributes 1.  Otherwise walk the
components in order of their minimal arc label, each from its minimal arc:
if every crossing is first reached on its overstrand the diagram is
descending, hence an unlink (1 for a knot, 0 for two or more components).
If not, the first crossing reached on its understrand gets switched and
smoothed, and the relation expresses the value in terms of the two simpler
diagrams.  Each switch lowers the number of under-first crossings and each
smoothing removes a crossing, so the pair (crossings, under-first count)
decreases lexicographically and the recursion terminates.

Values are memoized on canonical diagram codes in a SkeinContext, which
also carries a node budget so runaway inputs fail fast instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import (
    Crossing,
    Diagram,
    canonical_code,
    components,
    is_graph_connected,
    linking_number,
    reduce as _reduce,
    smooth_crossing,
    switch_crossing,
)
from .poly import IntPoly


class NodeBudgetExceeded(RuntimeError):
    """A skein computation outgrew its context's node budget.

    Retry with a SkeinContext whose node_budget is larger.
    """


@dataclass
class SkeinContext:
    """Shared memo table and accounting for a batch of computations.

    reduce_diagrams applies R1/R2 reduction before every expansion; it is
    on by default and exists as a knob so tests can confirm the reduction
    does not change computed values.
    """

    memo: dict[str, IntPoly] = field(default_factory=dict)
    node_budget: int = 1_000_000
    nodes_expanded: int = 0
    cache_hits: int = 0
    reduce_diagrams: bool = True


def _first_visit_scan(d: Diagram) -> tuple[int | None, int]:
    """Locate under-first crossings along the canonical traversal.

    Returns (index of the first crossing reached on its understrand or
    None, total count of such crossings).  Components are walked in
    ascending order of minimal arc label, each starting from its minimal
    arc; a crossing is classified by the strand of its first visit.
    """
    end_at: dict[int, tuple[int, bool]] = {}
    for i, x in enumerate(d.crossings):
        end_at[x.a] = (i, True)
        end_at[x.over_in_arc] = (i, False)
    seen: set[int] = set()
    first_bad: int | None = None
    bad = 0
    for comp in components(d):
        for arc in comp:
            i, under = end_at[arc]
            if i in seen:
                continue
            seen.add(i)
            if under:
                bad += 1
                if first_bad is None:
                    first_bad = i
    return first_bad, bad


def conway(d: Diagram, ctx: SkeinContext | None = None) -> IntPoly:
    """Conway polynomial of the oriented link presented by d.

    The empty diagram evaluates to 1 (the multiplicative unit, consistent
    with connected sums); any split diagram evaluates to 0.
    """
    if ctx is None:
        ctx = SkeinContext()
    return _conway(d, ctx)


def _conway(d: Diagram, ctx: SkeinContext) -> IntPoly:
    # Switch chains are unrolled iteratively: pending holds, outermost
    # first, the memo key of each chain diagram together with the signed
    # z * nabla(smoothing) term its skein step contributed.  Recursion
    # happens only on smoothings, so the depth is bounded by the crossing
    # count of the original diagram.
    pending: list[tuple[str, int, IntPoly]] = []
    current = d
    prev_measure: tuple[int, int] | None = None
    value: IntPoly
    while True:
        ctx.nodes_expanded += 1
        if ctx.nodes_expanded > ctx.node_budget:
            raise NodeBudgetExceeded(
                "skein expansion exceeded the budget of %d nodes" % ctx.node_budget
            )
        if ctx.reduce_diagrams:
            current = _reduce(current)
        if not is_graph_connected(current):
            value = IntPoly.zero()
            break
        if not current.crossings:
            # connected and crossingless: one circle, or nothing at all
            value = IntPoly.one()
            break
        key = canonical_code(current)
        cached = ctx.memo.get(key)
        if cached is not None:
            ctx.cache_hits += 1
            value = cached
            break
        bad_index, bad_count = _first_visit_scan(current)
        measure = (len(current.crossings), bad_count)
        assert prev_measure is None or measure < prev_measure
        prev_measure = measure
        if bad_index is None:
            value = IntPoly.one() if len(components(current)) == 1 else IntPoly.zero()
            ctx.memo[key] = value
            break
        x = current.crossings[bad_index]
        term = _conway(smooth_crossing(current, x), ctx).shift(1)
        pending.append((key, x.sign, term))
        current = switch_crossing(current, x)
    for key, s, term in reversed(pending):
        value = value + term if s > 0 else value - term
        ctx.memo[key] = value
    return value


def conway_torus2(m: int) -> IntPoly:
    """Closed form for the closure of the 2-strand braid with m positive
    crossings: P(0) = 0, P(1) = 1, P(m) = z*P(m-1) + P(m-2)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    prev, cur = IntPoly.zero(), IntPoly.one()
    if m == 0:
        return prev
    z = IntPoly.z()
    for _ in range(m - 1):
        prev, cur = cur, z * cur + prev
    return cur


def conway_Kn(n: int) -> IntPoly:
    """Conway polynomial of the connected sum of the (2, 2n+3) torus knot
    with the mirror of the (2, 2n+1) torus knot.

    The mirror factor needs no sign adjustment: a knot's polynomial has
    only even powers, so mirroring leaves it unchanged.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return conway_torus2(2 * n + 3) * conway_torus2(2 * n + 1)


def a2(d: Diagram, ctx: SkeinContext | None = None) -> int:
    """The z^2 coefficient of a knot diagram's Conway polynomial."""
    if len(components(d)) != 1:
        raise ValueError("a2 is defined for knot diagrams only")
    return conway(d, ctx).coeff(2)


def check_skein_identity(
    d: Diagram, x: Crossing, ctx: SkeinContext | None = None
) -> bool:
    """Verify nabla(L+) - nabla(L-) = z nabla(L0) at crossing x of d."""
    if ctx is None:
        ctx = SkeinContext()
    switched = switch_crossing(d, x)
    plus, minus = (d, switched) if x.sign > 0 else (switched, d)
    left = conway(plus, ctx) - conway(minus, ctx)
    right = conway(smooth_crossing(d, x), ctx).shift(1)
    return left == right


def check_a2_skein(
    d_plus: Diagram, x: Crossing, ctx: SkeinContext | None = None
) -> bool:
    """Verify a2(K+) - a2(K-) = lk(L0) at a positive crossing of a knot.

    Smoothing a self-crossing of a knot always splits it into a
    two-component link, whose linking number the identity predicts as the
    drop in a2 under the crossing change.
    """
    if len(components(d_plus)) != 1:
        raise ValueError("expected a knot diagram")
    if x.sign != 1:
        raise ValueError("expected a positive crossing")
    if ctx is None:
        ctx = SkeinContext()
    smoothed = smooth_crossing(d_plus, x)
    if len(components(smoothed)) != 2:
        raise ValueError("smoothing did not yield a two-component link")
    drop = a2(d_plus, ctx) - a2(switch_crossing(d_plus, x), ctx)
    return drop == linking_number(smoothed, 0, 1)
