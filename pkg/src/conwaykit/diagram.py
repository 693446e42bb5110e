"""Oriented link diagrams as planar diagram (PD) codes.

A diagram is a set of crossings plus a count of crossingless circles
("free loops").  Each crossing ``X(a,b,c,d)`` lists the four arc labels
counterclockwise around the crossing, starting at the incoming understrand:
``a`` is the incoming under arc, ``c`` the outgoing under arc, and ``b``/``d``
carry the overstrand, whose direction is resolved from the global succession
rule: the outgoing over arc is the successor of the incoming over arc within
its component's arc cycle.

Sign convention: a crossing is positive exactly when the incoming overstrand
occupies position ``d``.  Equivalently, rotating the overstrand's direction
counterclockwise by a quarter turn gives the understrand's direction.  This
matches the usual reading of published PD codes (e.g. the standard trefoil
code X(1,4,2,5);X(3,6,4,1);X(5,2,6,3) has writhe -3).

Arc labels are positive integers; each label occurs exactly twice overall.
Text grammar::

    PD   := item (';' item)*
    item := 'X(' int ',' int ',' int ',' int ')' | 'O'

``O`` denotes a free loop (PD codes cannot express a crossingless circle).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class PDSyntaxError(ValueError):
    """Malformed PD text; carries the 0-based offset of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PDValidationError(ValueError):
    """Structurally invalid diagram (bad arc multiplicities or succession)."""


@dataclass(frozen=True)
class Crossing:
    """One crossing; over_in records which of b/d is the incoming over arc."""

    a: int
    b: int
    c: int
    d: int
    over_in: str  # 'b' or 'd'

    @property
    def over_in_arc(self) -> int:
        return self.b if self.over_in == "b" else self.d

    @property
    def over_out_arc(self) -> int:
        return self.d if self.over_in == "b" else self.b

    @property
    def sign(self) -> int:
        return 1 if self.over_in == "d" else -1

    def slots(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class Diagram:
    """An oriented link diagram: crossings plus crossingless circles."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def arcs(self) -> set[int]:
        out: set[int] = set()
        for x in self.crossings:
            out.update(x.slots())
        return out


EMPTY = Diagram()
UNKNOT = Diagram(free_loops=1)


# -- parsing and validation --------------------------------------------------

_ITEM = re.compile(r"\s*(O|X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))\s*")


def parse_pd(text: str) -> Diagram:
    """Parse PD text, resolve overstrand directions, and validate.

    Raises PDSyntaxError for malformed text and PDValidationError when the
    arc structure is inconsistent (an arc not used exactly twice, succession
    not a bijection, or an overstrand whose direction cannot be resolved).
    """
    tuples: list[tuple[int, int, int, int]] = []
    free_loops = 0
    pos = 0
    while True:
        m = _ITEM.match(text, pos)
        if m is None:
            found = text[pos] if pos < len(text) else "end of input"
            raise PDSyntaxError(f"expected 'X(a,b,c,d)' or 'O', found {found!r}", pos)
        if m.group(1) == "O":
            free_loops += 1
        else:
            tuples.append(tuple(int(g) for g in m.groups()[1:]))  # type: ignore[arg-type]
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != ";":
            raise PDSyntaxError(f"expected ';', found {text[pos]!r}", pos)
        pos += 1
    if not tuples and free_loops == 0:
        raise PDSyntaxError("empty diagram", 0)
    for t in tuples:
        for label in t:
            if label < 1:
                raise PDValidationError(f"arc labels must be positive, found {label}")
    over_ins = _resolve_over_directions(tuples)
    crossings = tuple(
        Crossing(a, b, c, d, over_in)
        for (a, b, c, d), over_in in zip(tuples, over_ins)
    )
    return Diagram(crossings, free_loops)


def _resolve_over_directions(tuples: list[tuple[int, int, int, int]]) -> list[str]:
    """Decide, for each crossing, whether b or d is the incoming over arc.

    Every arc must end at exactly one pass and start at exactly one pass.
    Under passes fix a as an end and c as a start; the over pass of each
    crossing consumes one end and one start from {b, d}.  Unit propagation
    commits every locally forced choice; anything still undecided afterwards
    is genuinely ambiguous input.
    """
    counts: dict[int, int] = {}
    for t in tuples:
        for label in t:
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(label for label, n in counts.items() if n != 2)
    if bad:
        raise PDValidationError(
            f"each arc label must occur exactly twice; violated by {bad}"
        )

    end_free = {label: 1 for label in counts}
    start_free = {label: 1 for label in counts}

    def consume(table: dict[int, int], label: int, what: str) -> None:
        table[label] -= 1
        if table[label] < 0:
            raise PDValidationError(
                f"arc succession is not a bijection: arc {label} {what} twice"
            )

    for a, _, c, _ in tuples:
        consume(end_free, a, "ends")
        consume(start_free, c, "starts")

    decided: dict[int, str] = {}
    while len(decided) < len(tuples):
        progress = False
        for i, (_, b, _, d) in enumerate(tuples):
            if i in decided:
                continue
            b_in_ok = end_free[b] > 0 and start_free[d] > 0
            d_in_ok = end_free[d] > 0 and start_free[b] > 0
            if b == d:
                # over pass enters and leaves on one arc: sign is unknowable
                b_in_ok = d_in_ok = end_free[b] > 0 and start_free[b] > 0
            if not b_in_ok and not d_in_ok:
                raise PDValidationError(
                    f"arc succession is not a bijection at crossing {i + 1}"
                )
            if b_in_ok and d_in_ok:
                continue
            over_in = "b" if b_in_ok else "d"
            incoming, outgoing = (b, d) if over_in == "b" else (d, b)
            consume(end_free, incoming, "ends")
            consume(start_free, outgoing, "starts")
            decided[i] = over_in
            progress = True
        if not progress:
            undecided = sorted(set(range(len(tuples))) - set(decided))
            raise PDValidationError(
                "overstrand direction is ambiguous at crossing(s) "
                + ", ".join(str(i + 1) for i in undecided)
            )
    return [decided[i] for i in range(len(tuples))]


def pd_text(d: Diagram) -> str:
    """PD text for d with its current labels (crossings in stored order)."""
    items = [f"X({x.a},{x.b},{x.c},{x.d})" for x in d.crossings]
    items += ["O"] * d.free_loops
    return ";".join(items)


# -- components and orientation-derived data ----------------------------------


def _successor_table(d: Diagram) -> dict[int, int]:
    succ: dict[int, int] = {}
    for x in d.crossings:
        succ[x.a] = x.c
        succ[x.over_in_arc] = x.over_out_arc
    return succ


def components(d: Diagram) -> tuple[tuple[int, ...], ...]:
    """Arc cycles ordered by minimal arc, each starting at its minimal arc.

    Free loops contribute empty trailing cycles, so len(components(d)) is the
    component count of the link.
    """
    succ = _successor_table(d)
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in sorted(succ):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        arc = succ[start]
        while arc != start:
            cycle.append(arc)
            seen.add(arc)
            arc = succ[arc]
        cycles.append(tuple(cycle))
    cycles.extend(() for _ in range(d.free_loops))
    return tuple(cycles)


def _component_index(d: Diagram) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, cycle in enumerate(components(d)):
        for arc in cycle:
            out[arc] = i
    return out


def sign(d: Diagram, x: Crossing) -> int:
    """+1 or -1 for a crossing of d."""
    if x not in d.crossings:
        raise ValueError("crossing does not belong to this diagram")
    return x.sign


def writhe(d: Diagram) -> int:
    """Sum of crossing signs."""
    return sum(x.sign for x in d.crossings)


def linking_number(d: Diagram, c1: int, c2: int) -> int:
    """Half the signed count of crossings between components c1 and c2.

    c1 and c2 index into components(d); they must be distinct and in range.
    """
    comps = components(d)
    n = len(comps)
    if not (0 <= c1 < n and 0 <= c2 < n):
        raise ValueError(f"component index out of range (diagram has {n})")
    if c1 == c2:
        raise ValueError("linking number needs two distinct components")
    owner = _component_index(d)
    total = 0
    wanted = {c1, c2}
    for x in d.crossings:
        if {owner[x.a], owner[x.over_in_arc]} == wanted:
            total += x.sign
    # inter-component crossings come in sign-balanced pairs mod 2
    assert total % 2 == 0, "odd inter-component crossing sum (non-planar input?)"
    return total // 2


# -- elementary moves ---------------------------------------------------------


def _crossing_index(d: Diagram, x: Crossing) -> int:
    try:
        return d.crossings.index(x)
    except ValueError:
        raise ValueError("crossing does not belong to this diagram") from None


def switch_crossing(d: Diagram, x: Crossing) -> Diagram:
    """Exchange over/under at x; arc labels and all other crossings unchanged."""
    i = _crossing_index(d, x)
    if x.over_in == "d":
        y = Crossing(x.d, x.a, x.b, x.c, "b")
    else:
        y = Crossing(x.b, x.c, x.d, x.a, "d")
    return Diagram(d.crossings[:i] + (y,) + d.crossings[i + 1 :], d.free_loops)


def mirror(d: Diagram) -> Diagram:
    """Exchange over/under at every crossing (every sign negates)."""
    out = d
    for x in list(out.crossings):
        out = switch_crossing(out, x)
    return out


def _remove_crossings(d: Diagram, gone: set[int], bridges: dict[int, int]) -> Diagram:
    """Delete the crossings at indices `gone`, gluing arcs per `bridges`.

    bridges maps arc u -> arc v meaning: the end of u is joined to the start
    of v.  Maximal bridge chains fuse into one arc named by the minimal label
    in the chain; bridge cycles close into crossingless circles and are added
    to free_loops.  Every deleted pass must contribute exactly one bridge.
    """
    mapping: dict[int, int] = {}
    loops = d.free_loops
    heads = set(bridges) - set(bridges.values())
    visited: set[int] = set()
    for head in sorted(heads):
        run = [head]
        while run[-1] in bridges:
            run.append(bridges[run[-1]])
        target = min(run)
        for arc in run:
            mapping[arc] = target
        visited.update(run)
    for start in sorted(bridges):
        if start in visited:
            continue
        # a cycle: every arc in it has both occurrences on deleted passes
        arc = start
        while True:
            visited.add(arc)
            arc = bridges[arc]
            if arc == start:
                break
        loops += 1
    kept = []
    for i, x in enumerate(d.crossings):
        if i in gone:
            continue
        kept.append(
            Crossing(
                mapping.get(x.a, x.a),
                mapping.get(x.b, x.b),
                mapping.get(x.c, x.c),
                mapping.get(x.d, x.d),
                x.over_in,
            )
        )
    return Diagram(tuple(kept), loops)


def smooth_crossing(d: Diagram, x: Crossing) -> Diagram:
    """Oriented smoothing at x: a joins the over-out arc, over-in joins c.

    The crossing count drops by one and the component count changes by
    exactly one.  A fused run with no remaining crossings becomes a free loop.
    """
    i = _crossing_index(d, x)
    return _remove_crossings(d, {i}, {x.a: x.over_out_arc, x.over_in_arc: x.c})


# -- Reidemeister reduction ----------------------------------------------------


def _r1_index(d: Diagram) -> int | None:
    for i, x in enumerate(d.crossings):
        # a kink shares one arc between its over and under passes
        if x.c == x.over_in_arc or x.a == x.over_out_arc:
            return i
    return None


def _r2_pair(d: Diagram) -> tuple[int, int] | None:
    for i, x in enumerate(d.crossings):
        for j in range(i + 1, len(d.crossings)):
            y = d.crossings[j]
            if x.sign == y.sign:
                continue
            over_direct = (
                x.over_out_arc == y.over_in_arc or y.over_out_arc == x.over_in_arc
            )
            under_direct = x.c == y.a or y.c == x.a
            if over_direct and under_direct:
                return i, j
    return None


def reduce(d: Diagram) -> Diagram:
    """Apply R1 and R2 simplifications until none remain.

    Both moves preserve the link type, hence the Conway polynomial.  No other
    moves are attempted; the result is generally not a minimal diagram.
    """
    while True:
        i = _r1_index(d)
        if i is not None:
            x = d.crossings[i]
            d = _remove_crossings(
                d, {i}, {x.a: x.c, x.over_in_arc: x.over_out_arc}
            )
            continue
        pair = _r2_pair(d)
        if pair is not None:
            i, j = pair
            x, y = d.crossings[i], d.crossings[j]
            bridges = {x.a: x.c, y.a: y.c}
            bridges[x.over_in_arc] = x.over_out_arc
            bridges[y.over_in_arc] = y.over_out_arc
            d = _remove_crossings(d, {i, j}, bridges)
            continue
        return d


def is_graph_connected(d: Diagram) -> bool:
    """True when the diagram is one piece as a 4-valent graph.

    Free loops count as separate pieces.  The empty diagram is connected.
    """
    n = len(d.crossings)
    pieces = d.free_loops
    if n == 0:
        return pieces <= 1
    if pieces:
        return False
    arc_home: dict[int, int] = {}
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, x in enumerate(d.crossings):
        for arc in x.slots():
            if arc in arc_home:
                ri, rj = find(arc_home[arc]), find(i)
                parent[ri] = rj
            else:
                arc_home[arc] = i
    return len({find(i) for i in range(n)}) == 1


# -- canonical form -----------------------------------------------------------


def _relabel(d: Diagram, mapping: dict[int, int]) -> Diagram:
    return Diagram(
        tuple(
            Crossing(
                mapping.get(x.a, x.a),
                mapping.get(x.b, x.b),
                mapping.get(x.c, x.c),
                mapping.get(x.d, x.d),
                x.over_in,
            )
            for x in d.crossings
        ),
        d.free_loops,
    )


def canonical_code(d: Diagram) -> str:
    """Deterministic string key for memoization.

    Components are traversed in order of their minimal original arc label,
    starting at that arc; arcs are renumbered sequentially from 1 along the
    traversal; the relabeled crossings are serialized in sorted order.  Two
    diagrams that differ only by an order-preserving relabeling of arcs get
    the same code.
    """
    mapping: dict[int, int] = {}
    for cycle in components(d):
        for arc in cycle:
            mapping[arc] = len(mapping) + 1
    relabeled = _relabel(d, mapping)
    items = sorted((x.a, x.b, x.c, x.d) for x in relabeled.crossings)
    parts = [f"X({a},{b},{c},{d})" for a, b, c, d in items]
    parts += ["O"] * d.free_loops
    return ";".join(parts)


# -- constructions ------------------------------------------------------------


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Place d2 next to d1 (labels shifted clear of d1's)."""
    offset = max(d1.arcs(), default=0)
    shifted = _relabel(d2, {arc: arc + offset for arc in d2.arcs()})
    return Diagram(d1.crossings + shifted.crossings, d1.free_loops + d2.free_loops)


def _arc_end_slot(d: Diagram, arc: int) -> tuple[int, str]:
    """(crossing index, 'a' or over slot letter) where arc arrives."""
    for i, x in enumerate(d.crossings):
        if x.a == arc:
            return i, "a"
        if x.over_in_arc == arc:
            return i, x.over_in
    raise ValueError(f"arc {arc} does not end at any crossing")


def _replace_slot(d: Diagram, index: int, slot: str, new_arc: int) -> Diagram:
    x = d.crossings[index]
    fields = {"a": x.a, "b": x.b, "c": x.c, "d": x.d}
    fields[slot] = new_arc
    y = Crossing(fields["a"], fields["b"], fields["c"], fields["d"], x.over_in)
    return Diagram(d.crossings[:index] + (y,) + d.crossings[index + 1 :], d.free_loops)


def connected_sum(d1: Diagram, arc1: int, d2: Diagram, arc2: int) -> Diagram:
    """Splice two knot diagrams along the chosen arcs, respecting orientation.

    Both inputs must be single-component diagrams with at least one crossing
    (a bare free loop has no arc to cut).
    """
    for d, arc, which in ((d1, arc1, "first"), (d2, arc2, "second")):
        if len(components(d)) != 1:
            raise ValueError(f"{which} operand is not a knot diagram")
        if arc not in d.arcs():
            raise ValueError(f"arc {arc} not present in the {which} operand")
    offset = max(d1.arcs(), default=0)
    shifted = _relabel(d2, {arc: arc + offset for arc in d2.arcs()})
    arc2s = arc2 + offset
    # cut arc1 (runs S1->E1) and arc2 (S2->E2); rejoin S1->E2 and S2->E1
    i1, slot1 = _arc_end_slot(d1, arc1)
    left = _replace_slot(d1, i1, slot1, arc2s)
    i2, slot2 = _arc_end_slot(shifted, arc2s)
    right = _replace_slot(shifted, i2, slot2, arc1)
    return Diagram(left.crossings + right.crossings, d1.free_loops + d2.free_loops)


def meridian_link(d: Diagram, arc: int | None = None) -> Diagram:
    """Add a small circle clasping one arc of a knot diagram once (lk = +1).

    The circle crosses the strand twice, once over and once under, with both
    crossings positive.  For the crossingless unknot the free loop itself is
    materialized as the clasped strand.
    """
    if len(components(d)) != 1:
        raise ValueError("meridian_link needs a knot diagram")
    if not d.crossings:
        # the unknot 'O': the result is a positive Hopf diagram
        return Diagram(
            (Crossing(4, 2, 3, 1, "d"), Crossing(2, 4, 1, 3, "d")),
            d.free_loops - 1,
        )
    if arc is None:
        arc = min(d.arcs())
    if arc not in d.arcs():
        raise ValueError(f"arc {arc} not present in the diagram")
    base = max(d.arcs())
    u, w, p, q = base + 1, base + 2, base + 3, base + 4
    i, slot = _arc_end_slot(d, arc)
    out = _replace_slot(d, i, slot, w)
    strand_enters_under = Crossing(u, q, w, p, "d")  # strand under, circle over
    strand_enters_over = Crossing(q, u, p, arc, "d")  # strand over, circle under
    return Diagram(
        out.crossings + (strand_enters_over, strand_enters_under), out.free_loops
    )


def _braid_closure(word: Iterable[int], strands: int) -> Diagram:
    """Trace closure of a braid word (internal constructor for tests/sweeps).

    Letters are nonzero integers: +i crosses strands i,i+1 with positive
    sign, -i with negative sign.  Strands are oriented upward; strand k's
    final arc is fused back onto its initial arc.
    """
    if strands < 1:
        raise ValueError("strands must be >= 1")
    letters = list(word)
    for letter in letters:
        if letter == 0 or abs(letter) >= strands:
            raise ValueError(f"braid letter {letter} out of range for {strands} strands")
    current = list(range(1, strands + 1))
    fresh = strands
    crossings: list[Crossing] = []
    for letter in letters:
        i = abs(letter)
        l_in, r_in = current[i - 1], current[i]
        l_out, r_out = fresh + 1, fresh + 2
        fresh += 2
        if letter > 0:
            crossings.append(Crossing(r_in, r_out, l_out, l_in, "d"))
        else:
            crossings.append(Crossing(l_in, r_in, r_out, l_out, "b"))
        current[i - 1], current[i] = l_out, r_out
    # closure: top of strand k rejoins its bottom arc
    mapping: dict[int, int] = {}
    loops = 0
    for k in range(strands):
        top, bottom = current[k], k + 1
        if top == bottom:
            loops += 1  # strand met no crossing: a crossingless circle
        else:
            mapping[top] = bottom
    d = _relabel(Diagram(tuple(crossings), loops), mapping)
    return d


def torus2_diagram(m: int) -> Diagram:
    """Standard diagram of the (2, m) torus link: closure of a 2-strand
    braid with m positive crossings.  Knot for odd m, 2-component link
    for even m; the crossingless unlink (m = 0) is not representable."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _braid_closure([1] * m, 2)


def _reverse_component(d: Diagram, comp: int) -> Diagram:
    """Reverse the orientation of one component (ingestion/testing helper)."""
    cycles = components(d)
    if not (0 <= comp < len(cycles)):
        raise ValueError("component index out of range")
    arcs = set(cycles[comp])
    out: list[Crossing] = []
    for x in d.crossings:
        under_rev = x.a in arcs
        over_rev = x.over_in_arc in arcs
        if under_rev and over_rev:
            out.append(Crossing(x.c, x.d, x.a, x.b, x.over_in))
        elif under_rev:
            flipped = "b" if x.over_in == "d" else "d"
            out.append(Crossing(x.c, x.d, x.a, x.b, flipped))
        elif over_rev:
            flipped = "b" if x.over_in == "d" else "d"
            out.append(Crossing(x.a, x.b, x.c, x.d, flipped))
        else:
            out.append(x)
    return Diagram(tuple(out), d.free_loops)
