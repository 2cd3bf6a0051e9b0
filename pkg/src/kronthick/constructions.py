"""Explicit planar decompositions of the product families.

Every builder returns a Decomposition whose parts partition the target's
edge set; nothing here is trusted by fiat.  The verification module
re-derives coverage, disjointness and per-part planarity from scratch, and
the test suite certifies optimality against the bounds module.

Vertex naming convention: a vertex x^1_i (family x, layer 1, index i) is
VertexLabel(Family.X, i, 1).  Bipartite intermediates use the layerless
U/V families; products over K_2 use layers 1 and 2.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .bounds import (
    LEMMA_3_2,
    LEMMA_4_2,
    LEMMA_4_4,
    LEMMA_4_6,
    THM_3_3,
    theta_knnn_times_k2,
    thickness_lower_bound,
)
from .errors import (
    ConstructionConflictError,
    FixtureIntegrityError,
    InvalidSizeError,
    PreconditionError,
    SeedInvalidError,
    SeedRequiredError,
)
from .graphs import (
    Family,
    Graph,
    VertexLabel,
    edge,
    graph_union,
    induced_subgraph,
    make_complete,
    make_complete_bipartite,
    make_complete_tripartite,
)
from .planarity import is_planar
from .products import times_k2
from .verification import (
    OPTIMAL,
    UPPER_BOUND_ONLY,
    verify_decomposition,
)

__all__ = [
    "Decomposition",
    "MinimalBipartiteDecomposition",
    "chen_yin_k4p4p",
    "kn_times_k2_decomposition",
    "relabel_bipartite_part",
    "knnn_times_k2_n0mod4",
    "knnn_times_k2_n1mod4",
    "knnn_times_k2_fixture",
    "lemma46_assemble",
    "restrict_decomposition",
    "knnn_times_k2_decomposition",
    "oracle_seed_provider",
]


# ============================================================
# Result types
# ============================================================


@dataclass(frozen=True)
class Decomposition:
    """An edge-partition of `target` into planar parts.

    guarantee is OPTIMAL when the part count provably meets the thickness
    of the target, UPPER_BOUND_ONLY otherwise.  provenance names the
    formula/construction tag that produced it; figure optionally cites a
    drawn source for transcribed fixtures.
    """

    target: Graph
    parts: tuple[Graph, ...]
    guarantee: str
    provenance: str
    figure: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def num_parts(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class MinimalBipartiteDecomposition:
    """A (p+2)-part planar decomposition of K_{4p+3,4p+3} ending in one edge.

    The single-edge last part is what makes the tripartite assembly work:
    that edge's six product copies are the only ones that need relocating.
    """

    p: int
    parts: tuple[Graph, ...]
    single_edge: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.p < 1:
            raise InvalidSizeError(f"seed needs p >= 1, got {self.p}")

    @property
    def side_size(self) -> int:
        return 4 * self.p + 3


# ============================================================
# Label and edge helpers
# ============================================================


def _u(i: int) -> VertexLabel:
    return VertexLabel(Family.U, i)


def _v(i: int) -> VertexLabel:
    return VertexLabel(Family.V, i)


def _lab(family: Family, layer: int, i: int) -> VertexLabel:
    return VertexLabel(family, i, layer)


def _graph_from_edges(pairs) -> Graph:
    """Graph on exactly the endpoints of the given edges."""
    es = [edge(a, b) for a, b in pairs]
    vs = set()
    for a, b in es:
        vs.add(a)
        vs.add(b)
    return Graph(vs, es)


def _block(r: int) -> tuple[int, int, int, int]:
    """The four indices forming block r: 4r-3 .. 4r."""
    return (4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r)


# ============================================================
# Chen-Yin decomposition of K_{4p,4p}
# ============================================================


def _chen_yin_part_edges(p: int, r: int) -> list[tuple]:
    """Edges of the r-th main part G_r of the K_{4p,4p} decomposition.

    Within block r it is the complete bipartite K_{4,4} minus the matching;
    across blocks each side contributes two spokes per foreign block,
    index classes chosen so the union over r covers every non-matching
    edge exactly once.
    """
    a1, a2, a3, a4 = _block(r)
    es: list[tuple] = []
    for a in _block(r):
        for b in _block(r):
            if a != b:
                es.append((_v(a), _u(b)))
    for i in range(1, p + 1):
        if i == r:
            continue
        b1, b2, b3, b4 = _block(i)
        for a in (a1, a3):
            for b in (b1, b2):
                es.append((_v(a), _u(b)))
        for a in (a2, a4):
            for b in (b3, b4):
                es.append((_v(a), _u(b)))
        for a in (a3, a4):
            for b in (b1, b3):
                es.append((_v(b), _u(a)))
        for a in (a1, a2):
            for b in (b2, b4):
                es.append((_v(b), _u(a)))
    return es


def chen_yin_k4p4p(p: int) -> Decomposition:
    """Planar decomposition of K_{4p,4p} into p+1 parts.

    Parts 1..p are the block graphs G_r; the last part is exactly the
    perfect matching {u_i v_i : i = 1..4p}.  p+1 meets the thickness of
    K_{4p,4p}, so the result is optimal.
    """
    if p < 1:
        raise InvalidSizeError(f"chen_yin_k4p4p needs p >= 1, got {p}")
    n = 4 * p
    target = make_complete_bipartite(n, n)
    parts = [_graph_from_edges(_chen_yin_part_edges(p, r)) for r in range(1, p + 1)]
    matching = _graph_from_edges((_u(i), _v(i)) for i in range(1, n + 1))
    parts.append(matching)
    return Decomposition(
        target=target,
        parts=tuple(parts),
        guarantee=OPTIMAL,
        provenance=LEMMA_3_2,
    )


# ============================================================
# K_n x K_2 (crown graphs)
# ============================================================


def _g_prime_edges(p: int) -> list[tuple]:
    """Extension part for n = 4p+2: two double stars plus two cross edges.

    The two new vertices of each layer send stars to all old vertices of
    the other layer, and the four new vertices are tied up by the two
    cross edges; the pattern stays planar for every p and degenerates to
    2K_2 when p = 0.
    """
    n1, n2 = 4 * p + 1, 4 * p + 2
    x1 = lambda i: _lab(Family.PLAIN, 1, i)
    x2 = lambda i: _lab(Family.PLAIN, 2, i)
    es: list[tuple] = []
    for i in range(1, 4 * p + 1):
        es.append((x1(n1), x2(i)))
        es.append((x1(n2), x2(i)))
        es.append((x2(n1), x1(i)))
        es.append((x2(n2), x1(i)))
    es.append((x1(n1), x2(n2)))
    es.append((x1(n2), x2(n1)))
    return es


def kn_times_k2_decomposition(n: int) -> Decomposition:
    """Optimal planar decomposition of K_n x K_2 into ceil(n/4) parts.

    Even n: the block parts of the K_{4p,4p} decomposition (the matching
    part is exactly the edge set missing from the crown graph, so it is
    dropped), plus one extension part when n = 4p+2.  Odd n: build n+1
    and restrict to the first n indices; the part count is unchanged
    because ceil(n/4) = ceil((n+1)/4) for odd n.
    """
    if n < 2:
        raise InvalidSizeError(f"kn_times_k2_decomposition needs n >= 2, got {n}")
    if n % 2 == 1:
        bigger = kn_times_k2_decomposition(n + 1)
        d = restrict_decomposition(bigger, lambda v: v.index <= n)
        return replace(d, provenance=THM_3_3)
    p, rem = divmod(n, 4)
    dest = ((Family.PLAIN, 1), (Family.PLAIN, 2))
    parts: list[Graph] = []
    if p >= 1:
        cy = chen_yin_k4p4p(p)
        parts = [
            relabel_bipartite_part(g, (Family.V, Family.U), dest)
            for g in cy.parts[:-1]
        ]
    if rem == 2:
        parts.append(_graph_from_edges(_g_prime_edges(p)))
    target = times_k2(make_complete(n))
    return Decomposition(
        target=target,
        parts=tuple(parts),
        guarantee=OPTIMAL,
        provenance=THM_3_3,
    )


# ============================================================
# Relabeling bipartite parts into product layers
# ============================================================


def relabel_bipartite_part(part: Graph, source, dest) -> Graph:
    """Relabel a two-family part onto (family, layer) destinations.

    source is a pair of layerless families, dest a pair of (Family, layer)
    targets; indices are preserved.  Any vertex outside the two source
    families is an error: parts fed through here must be purely bipartite.
    """
    fam_a, fam_b = source
    (dfam_a, dlay_a), (dfam_b, dlay_b) = dest

    def mapv(v):
        if v.family is fam_a:
            return VertexLabel(dfam_a, v.index, dlay_a)
        if v.family is fam_b:
            return VertexLabel(dfam_b, v.index, dlay_b)
        raise PreconditionError(
            f"vertex {v.name} is in neither source family "
            f"({fam_a.value}, {fam_b.value})"
        )

    return part.map_vertices(mapv)


# The two three-block layouts used by the tripartite constructions.  A
# bipartite part on (v, u) is copied once per entry, v onto the first
# (family, layer) and u onto the second.
_BLOCKS_LAYER1 = (
    ((Family.X, 1), (Family.Y, 2)),
    ((Family.Y, 1), (Family.Z, 2)),
    ((Family.Z, 1), (Family.X, 2)),
)
_BLOCKS_LAYER2 = (
    ((Family.X, 2), (Family.Y, 1)),
    ((Family.Y, 2), (Family.Z, 1)),
    ((Family.Z, 2), (Family.X, 1)),
)


def _three_copies(part: Graph, blocks) -> Graph:
    """Union of the three relabeled copies of a bipartite part.

    The copies are vertex-disjoint (each block pair touches different
    (family, layer) classes), so planarity of the part is inherited.
    """
    out = relabel_bipartite_part(part, (Family.V, Family.U), blocks[0])
    for blk in blocks[1:]:
        out = graph_union(out, relabel_bipartite_part(part, (Family.V, Family.U), blk))
    return out


def _six_cycle_edges(i: int) -> list[tuple]:
    """The 6-cycle x1_i y2_i z1_i x2_i y1_i z2_i covering the index-i matchings."""
    x1, y1, z1 = (_lab(f, 1, i) for f in (Family.X, Family.Y, Family.Z))
    x2, y2, z2 = (_lab(f, 2, i) for f in (Family.X, Family.Y, Family.Z))
    return [(x1, y2), (y2, z1), (z1, x2), (x2, y1), (y1, z2), (z2, x1)]


# ============================================================
# K_{n,n,n} x K_2, n = 4p
# ============================================================


def knnn_times_k2_n0mod4(p: int) -> Decomposition:
    """Optimal decomposition of K_{4p,4p,4p} x K_2 into 2p+1 parts.

    Each main bipartite part is copied three times around the family
    cycle, once per layer orientation; the six per-index matchings that
    the copies leave uncovered close up into 4p disjoint 6-cycles, which
    form the final part.
    """
    if p < 1:
        raise InvalidSizeError(f"knnn_times_k2_n0mod4 needs p >= 1, got {p}")
    n = 4 * p
    cy = chen_yin_k4p4p(p)
    main = cy.parts[:-1]
    parts = [_three_copies(g, _BLOCKS_LAYER1) for g in main]
    parts += [_three_copies(g, _BLOCKS_LAYER2) for g in main]
    cycles: list[tuple] = []
    for i in range(1, n + 1):
        cycles.extend(_six_cycle_edges(i))
    parts.append(_graph_from_edges(cycles))
    target = times_k2(make_complete_tripartite(n, n, n))
    return Decomposition(
        target=target,
        parts=tuple(parts),
        guarantee=OPTIMAL,
        provenance=LEMMA_4_2,
    )


# ============================================================
# K_{n,n,n} x K_2, n = 4p+1
# ============================================================

# The new column/hub edges can be grouped onto the two main part families
# in two ways that produce the same union; the verifier arbitrates which
# grouping keeps every part planar.  "paired" keeps each hub star next to
# its mirror image; "layered" groups by the hub's own layer.
_HUB_GROUPING = "paired"


def _n1_wrap(p: int, j: int) -> int:
    """Old-index arithmetic mod 4p, staying in 1..4p."""
    return (j - 1) % (4 * p) + 1


def _n1_part_adjustments(p: int, r: int, grouping: str):
    """(adds1, dels1, adds2, dels2) for the r-th main parts at n = 4p+1.

    adds are hub spokes from the six new vertices plus the four per-block
    matching edges the final part cannot absorb; dels are the two block
    edges whose removal frees the faces the new spokes pass through.
    """
    nn = 4 * p + 1
    i1, i2, i3, i4 = _block(r)
    x1 = lambda i: _lab(Family.X, 1, i)
    x2 = lambda i: _lab(Family.X, 2, i)
    y1 = lambda i: _lab(Family.Y, 1, i)
    y2 = lambda i: _lab(Family.Y, 2, i)
    z1 = lambda i: _lab(Family.Z, 1, i)
    z2 = lambda i: _lab(Family.Z, 2, i)

    if grouping == "paired":
        adds1 = [
            (x1(nn), y2(i1)), (x1(nn), y2(i4)),
            (y2(nn), x1(i3)), (y2(nn), x1(_n1_wrap(p, 4 * r + 2))),
            (y1(nn), z2(i2)), (y1(nn), z2(i3)),
            (z2(nn), y1(i2)), (z2(nn), y1(i3)),
            (z1(nn), x2(i1)), (z1(nn), x2(i4)),
            (x2(nn), z1(i1)), (x2(nn), z1(i4)),
            (z1(i4), x2(i4)),
            (y1(i3), z2(i3)),
            (z1(i2), y2(i2)),
            (x1(i1), z2(i1)),
        ]
    elif grouping == "layered":
        adds1 = [
            (x1(nn), y2(i1)), (x1(nn), y2(i4)),
            (z1(nn), x2(i1)), (z1(nn), x2(i4)),
            (x1(nn), z2(i1)), (x1(nn), z2(i4)),
            (x1(i1), z2(i1)), (x1(i4), z2(i4)),
            (y1(nn), z2(i2)), (y1(nn), z2(i3)),
            (z2(nn), y1(i2)), (z2(nn), y1(i3)),
            (y2(nn), x1(i2)), (y2(nn), x1(i3)),
            (y1(i2), z2(i2)), (y1(i3), z2(i3)),
        ]
    else:
        raise PreconditionError(f"unknown hub grouping {grouping!r}")
    dels1 = [(y1(i1), z2(i4)), (z1(i2), x2(i3))]

    def swap(v: VertexLabel) -> VertexLabel:
        return VertexLabel(v.family, v.index, 3 - v.layer)

    adds2 = [(swap(a), swap(b)) for a, b in adds1]
    dels2 = [(swap(a), swap(b)) for a, b in dels1]
    return adds1, dels1, adds2, dels2


def _n1_final_part_edges(p: int) -> list[tuple]:
    """The last part for n = 4p+1: hub leftovers, matchings, repair edges.

    Index classes: i = 4r-3, 4r take the y/z hub spokes while i = 4r-2,
    4r-1 take the x hub spokes, complementing what the main parts
    absorbed; the x-y matchings and the 6-cycle on the new index close
    the remaining gaps, and the four edges deleted from each main part
    pair reappear here.
    """
    nn = 4 * p + 1
    x1 = lambda i: _lab(Family.X, 1, i)
    x2 = lambda i: _lab(Family.X, 2, i)
    y1 = lambda i: _lab(Family.Y, 1, i)
    y2 = lambda i: _lab(Family.Y, 2, i)
    z1 = lambda i: _lab(Family.Z, 1, i)
    z2 = lambda i: _lab(Family.Z, 2, i)
    es: list[tuple] = []
    for i in range(1, 4 * p + 1):
        if i % 4 in (2, 3):
            es += [
                (x1(nn), y2(i)), (x2(nn), y1(i)),
                (z1(nn), x2(i)), (z2(nn), x1(i)),
                (x1(nn), z2(i)), (x2(nn), z1(i)),
                (x1(i), z2(i)), (x2(i), z1(i)),
            ]
        else:
            es += [
                (y1(nn), z2(i)), (y2(nn), z1(i)),
                (z1(nn), y2(i)), (z2(nn), y1(i)),
                (y1(nn), x2(i)), (y2(nn), x1(i)),
                (y1(i), z2(i)), (y2(i), z1(i)),
            ]
        es.append((x1(i), y2(i)))
        es.append((x2(i), y1(i)))
    for r in range(1, p + 1):
        i1, i2, i3, i4 = _block(r)
        es += [
            (y1(i1), z2(i4)), (y2(i1), z1(i4)),
            (z1(i2), x2(i3)), (z2(i2), x1(i3)),
        ]
    es += _six_cycle_edges(nn)
    return es


def knnn_times_k2_n1mod4(p: int, grouping: str | None = None) -> Decomposition:
    """Optimal decomposition of K_{4p+1,4p+1,4p+1} x K_2 into 2p+1 parts.

    Starts from the n = 4p layout and threads the six new vertices'
    edges through the existing parts; needs p >= 2 (the n = 1 and n = 5
    cases ship as drawn fixtures instead).
    """
    if p < 2:
        raise PreconditionError(
            f"knnn_times_k2_n1mod4 needs p >= 2 (got {p}); "
            "n = 1 and n = 5 are served by fixtures"
        )
    if grouping is None:
        grouping = _HUB_GROUPING
    n = 4 * p + 1
    cy = chen_yin_k4p4p(p)
    main = cy.parts[:-1]
    parts: list[Graph] = []
    swapped: list[Graph] = []
    for r in range(1, p + 1):
        base1 = _three_copies(main[r - 1], _BLOCKS_LAYER1).edge_set
        base2 = _three_copies(main[r - 1], _BLOCKS_LAYER2).edge_set
        adds1, dels1, adds2, dels2 = _n1_part_adjustments(p, r, grouping)
        e1 = (base1 - {edge(a, b) for a, b in dels1}) | {edge(a, b) for a, b in adds1}
        e2 = (base2 - {edge(a, b) for a, b in dels2}) | {edge(a, b) for a, b in adds2}
        parts.append(_graph_from_edges(e1))
        swapped.append(_graph_from_edges(e2))
    parts += swapped
    parts.append(_graph_from_edges(_n1_final_part_edges(p)))
    target = times_k2(make_complete_tripartite(n, n, n))
    return Decomposition(
        target=target,
        parts=tuple(parts),
        guarantee=OPTIMAL,
        provenance=LEMMA_4_4,
    )


# ============================================================
# Drawn fixtures: n = 1, 3, 5
# ============================================================

_FIXTURE_SIZES = (1, 3, 5)


def knnn_times_k2_fixture(n: int) -> Decomposition:
    """Load and re-verify the checked-in decomposition for n in {1, 3, 5}.

    These small cases come from explicit drawings rather than a formula;
    the files are re-verified on every load so a corrupted fixture can
    never masquerade as a certificate.
    """
    if n not in _FIXTURE_SIZES:
        raise PreconditionError(f"no fixture for n = {n}; have {_FIXTURE_SIZES}")
    from importlib import resources

    from .serialize import decomposition_from_document, load_json

    ref = resources.files("kronthick").joinpath("data").joinpath(f"knnn_x_k2_n{n}.json")
    try:
        with resources.as_file(ref) as path:
            doc = load_json(path)
        d = decomposition_from_document(doc)
    except FileNotFoundError as exc:
        raise FixtureIntegrityError(f"fixture file for n = {n} is missing") from exc
    expected = times_k2(make_complete_tripartite(n, n, n))
    if d.target != expected:
        raise FixtureIntegrityError(f"fixture n = {n} declares the wrong target graph")
    want = theta_knnn_times_k2(n)
    if len(d.parts) != want:
        raise FixtureIntegrityError(
            f"fixture n = {n} has {len(d.parts)} parts, expected {want}"
        )
    report = verify_decomposition(d.target, d.parts, lower=want)
    if not report.passed:
        raise FixtureIntegrityError(f"fixture n = {n} fails verification: {report.summary()}")
    return replace(d, guarantee=OPTIMAL)


# ============================================================
# K_{n,n,n} x K_2, n = 4p+3, from an external seed
# ============================================================


def _seed_single_edge_indices(seed: MinimalBipartiteDecomposition) -> tuple[int, int]:
    """(a, b) with the seed's single edge equal to v_a u_b."""
    a = b = None
    for end in seed.single_edge:
        if end.family is Family.V:
            a = end.index
        elif end.family is Family.U:
            b = end.index
    if a is None or b is None:
        raise SeedInvalidError("seed single edge must join a v-vertex to a u-vertex")
    return a, b


def validate_seed(seed: MinimalBipartiteDecomposition) -> None:
    """Check a seed end to end; raises SeedInvalidError on any defect."""
    if not isinstance(seed, MinimalBipartiteDecomposition):
        raise SeedInvalidError(f"not a seed object: {seed!r}")
    m = seed.side_size
    if len(seed.parts) != seed.p + 2:
        raise SeedInvalidError(
            f"seed for K_{{{m},{m}}} must have {seed.p + 2} parts, got {len(seed.parts)}"
        )
    last = seed.parts[-1]
    if last.num_edges != 1 or last.edges[0] != edge(*seed.single_edge):
        raise SeedInvalidError("seed's last part must be exactly its declared single edge")
    _seed_single_edge_indices(seed)
    report = verify_decomposition(make_complete_bipartite(m, m), seed.parts)
    if not report.passed:
        raise SeedInvalidError(f"seed fails verification: {report.summary()}")


def _augment(part: Graph, pairs) -> Graph:
    extra = _graph_from_edges(pairs)
    return graph_union(part, extra)


def lemma46_assemble(p: int, seed: MinimalBipartiteDecomposition) -> Decomposition:
    """Decompose K_{4p+3,4p+3,4p+3} x K_2 into 2p+2 parts from a seed.

    Each seed part is copied three times around the family cycle in both
    layer orientations.  The six product copies of the seed's single edge
    v_a u_b are not given parts of their own: each is re-homed onto a part
    of the opposite layer group, where its endpoints land in two different
    vertex-disjoint copies, so the receiving part stays planar no matter
    what the seed looks like.
    """
    if p < 1:
        raise InvalidSizeError(f"lemma46_assemble needs p >= 1, got {p}")
    if not isinstance(seed, MinimalBipartiteDecomposition):
        raise SeedInvalidError(f"not a seed object: {seed!r}")
    if seed.p != p:
        raise SeedInvalidError(f"seed is for p = {seed.p}, assembly wants p = {p}")
    validate_seed(seed)
    m = 4 * p + 3
    a, b = _seed_single_edge_indices(seed)
    x1 = lambda i: _lab(Family.X, 1, i)
    x2 = lambda i: _lab(Family.X, 2, i)
    y1 = lambda i: _lab(Family.Y, 1, i)
    y2 = lambda i: _lab(Family.Y, 2, i)
    z1 = lambda i: _lab(Family.Z, 1, i)
    z2 = lambda i: _lab(Family.Z, 2, i)

    main = seed.parts[:-1]
    h1 = [_three_copies(g, _BLOCKS_LAYER1) for g in main]
    h2 = [_three_copies(g, _BLOCKS_LAYER2) for g in main]
    # The six copies of the dropped single edge, each sent to the group
    # whose copies do NOT already contain its endpoints' blocks.
    h1[0] = _augment(h1[0], [(x2(a), y1(b)), (z2(a), x1(b))])
    h1[1] = _augment(h1[1], [(y2(a), z1(b))])
    h2[0] = _augment(h2[0], [(x1(a), y2(b)), (z1(a), x2(b))])
    h2[1] = _augment(h2[1], [(y1(a), z2(b))])
    for label, g in (("first", h1[0]), ("second", h1[1]),
                     ("first", h2[0]), ("second", h2[1])):
        if not is_planar(g).planar:
            raise ConstructionConflictError(
                f"relocated edges made the {label} part nonplanar"
            )
    target = times_k2(make_complete_tripartite(m, m, m))
    return Decomposition(
        target=target,
        parts=tuple(h1 + h2),
        guarantee=OPTIMAL,
        provenance=LEMMA_4_6,
    )


# ============================================================
# Restriction
# ============================================================


def restrict_decomposition(d: Decomposition, keep) -> Decomposition:
    """Induce every part (and the target) on the vertices satisfying keep.

    Edge-disjointness, coverage and planarity all survive taking induced
    subgraphs, so the result is again a valid decomposition; the
    guarantee is recomputed against the restricted target's own lower
    bound since restriction can waste parts.
    """
    new_target = induced_subgraph(d.target, keep)
    if new_target.num_vertices == 0:
        raise PreconditionError("restriction removed every vertex")
    new_parts = tuple(induced_subgraph(g, keep) for g in d.parts)
    lower = thickness_lower_bound(new_target)
    guarantee = OPTIMAL if len(new_parts) == lower else UPPER_BOUND_ONLY
    return Decomposition(
        target=new_target,
        parts=new_parts,
        guarantee=guarantee,
        provenance=d.provenance,
        figure=None,
    )


# ============================================================
# Dispatcher
# ============================================================


def knnn_times_k2_decomposition(n: int, seed_provider=None) -> Decomposition:
    """Decompose K_{n,n,n} x K_2 into ceil((n+1)/2) parts, any n >= 1.

    Dispatch: fixtures for n in {1, 3, 5}; direct builders for n = 0, 1
    (mod 4); n = 3 (mod 4) needs a seed decomposition of K_{n,n} supplied
    via seed_provider(p); n = 2 (mod 4) builds n+1 and restricts.  With
    no seed provider, the seed-dependent sizes raise SeedRequiredError.
    """
    if n < 1:
        raise InvalidSizeError(f"knnn_times_k2_decomposition needs n >= 1, got {n}")
    if n in _FIXTURE_SIZES:
        return knnn_times_k2_fixture(n)
    if n == 2:
        return restrict_decomposition(
            knnn_times_k2_fixture(3), lambda v: v.index <= 2
        )
    rem = n % 4
    if rem == 0:
        return knnn_times_k2_n0mod4(n // 4)
    if rem == 1:
        return knnn_times_k2_n1mod4(n // 4)
    if rem == 3:
        p = (n - 3) // 4
        if seed_provider is None:
            raise SeedRequiredError(
                f"n = {n} needs a seed decomposition of K_{{{n},{n}}} "
                f"({p + 2} planar parts, the last a single edge); "
                "pass seed_provider or supply a seed file"
            )
        seed = seed_provider(p)
        return lemma46_assemble(p, seed)
    # rem == 2, n >= 6: decompose K_{n+1,n+1,n+1} x K_2 and restrict.
    bigger = knnn_times_k2_decomposition(n + 1, seed_provider)
    return restrict_decomposition(bigger, lambda v: v.index <= n)


def oracle_seed_provider(budget=None):
    """Seed provider that searches for the K_{4p+3,4p+3} decomposition.

    Exhaustive search is only realistic for p = 1 (K_{7,7}); larger p
    will exhaust any budget and raise SeedRequiredError.
    """

    def provider(p: int) -> MinimalBipartiteDecomposition:
        from .oracle import find_planar_partition

        m = 4 * p + 3
        g = make_complete_bipartite(m, m)
        forced = edge(_v(m), _u(m))
        result = find_planar_partition(g, p + 2, budget=budget, force_single_edge=forced)
        if result.found is None:
            raise SeedRequiredError(
                f"no seed for K_{{{m},{m}}} found within budget "
                f"(exhausted={result.exhausted}, nodes={result.nodes})"
            )
        parts = result.found.parts
        if len(parts) != p + 2:
            raise SeedInvalidError(
                f"search returned {len(parts)} parts, seed needs {p + 2}"
            )
        return MinimalBipartiteDecomposition(p=p, parts=parts, single_edge=forced)

    return provider
