"""Closed-form thickness values and bounds, each reported with provenance tags.

Everything here is exact integer arithmetic; ceilings are computed with
negative floor division, never floats.  The convention throughout the package
is theta = 1 for every planar graph, including edgeless ones; theta is
undefined only for the empty vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSizeError, PreconditionError
from .graphs import Graph, is_triangle_free
from .planarity import euler_max_edges, is_planar
from .products import kronecker_product, times_k2

# Provenance tags carried by reports and decompositions.
THM_2_1 = "THM_2_1"
THM_2_2 = "THM_2_2"
LEMMA_3_1 = "LEMMA_3_1"
LEMMA_3_2 = "LEMMA_3_2"
THM_3_3 = "THM_3_3"
THM_3_4 = "THM_3_4"
THM_3_6 = "THM_3_6"
COR_3_7 = "COR_3_7"
COR_3_8 = "COR_3_8"
THM_4_1 = "THM_4_1"
LEMMA_4_2 = "LEMMA_4_2"
LEMMA_4_4 = "LEMMA_4_4"
LEMMA_4_6 = "LEMMA_4_6"
THM_4_7 = "THM_4_7"
EULER = "EULER"
PLANAR = "PLANAR"
OPEN = "OPEN"
ORACLE = "ORACLE"
FIXTURE = "FIXTURE"
RESTRICTION = "RESTRICTION"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper thickness bounds; exact is set only when they are proven equal."""

    lower: int
    upper: int | None  # None means unknown
    exact: int | None
    provenance: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.lower < 0:
            raise PreconditionError("lower bound must be non-negative")
        if self.upper is not None and self.lower > self.upper:
            raise PreconditionError(
                f"lower {self.lower} exceeds upper {self.upper}"
            )
        if self.exact is not None and not (self.lower == self.upper == self.exact):
            raise PreconditionError("exact requires lower == upper == exact")


def _dedup(tags) -> tuple[str, ...]:
    out: list[str] = []
    for t in tags:
        if t not in out:
            out.append(t)
    return tuple(out)


def thickness_lower_bound(g: Graph) -> int:
    """Edge-count lower bound for theta(g): ceil(|E| / planar edge capacity)."""
    v = g.num_vertices
    if v == 0:
        raise PreconditionError("thickness is undefined for the empty vertex set")
    e = g.num_edges
    if e == 0:
        return 1
    cap = euler_max_edges(v, is_triangle_free(g))
    return max(1, _ceil_div(e, cap))


def product_lower_bound(g: Graph, h: Graph) -> int:
    """Counting lower bound for theta(g x h); both factors need >= 2 vertices."""
    if g.num_vertices < 2 or h.num_vertices < 2:
        raise PreconditionError("product_lower_bound needs factors on >= 2 vertices")
    eg, eh = g.num_edges, h.num_edges
    vg, vh = g.num_vertices, h.num_vertices
    prod = kronecker_product(g, h)
    if is_triangle_free(prod):
        val = _ceil_div(eg * eh, vg * vh - 2)
    else:
        val = _ceil_div(2 * eg * eh, 3 * vg * vh - 6)
    return max(val, 1)


def _theta_hat_times_k2(x: Graph) -> int:
    """Upper bound for theta(x x K_2): 1 when that product is planar, else ceil(n/4)."""
    if is_planar(times_k2(x)).planar:
        return 1
    return _ceil_div(x.num_vertices, 4)


def product_upper_bound(g: Graph, h: Graph) -> int:
    """Decomposition upper bound: route each factor edge through a double cover."""
    if g.num_edges == 0 or h.num_edges == 0:
        return 1
    return min(
        h.num_edges * _theta_hat_times_k2(g),
        g.num_edges * _theta_hat_times_k2(h),
    )


def theta_knn(n: int) -> int:
    """theta(K_{n,n}) = ceil((n+2)/4)."""
    if n < 1:
        raise InvalidSizeError(f"n must be >= 1, got {n}")
    return _ceil_div(n + 2, 4)


def theta_kn_times_k2(n: int) -> int:
    """theta(K_n x K_2) = ceil(n/4) for n >= 2; 1 for the edgeless n = 1 case."""
    if n < 1:
        raise InvalidSizeError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    return _ceil_div(n, 4)


def theta_knnn_times_k2(n: int) -> int:
    """theta(K_{n,n,n} x K_2) = ceil((n+1)/2)."""
    if n < 1:
        raise InvalidSizeError(f"n must be >= 1, got {n}")
    return _ceil_div(n + 1, 2)


def g_times_k2_bounds(g: Graph) -> BoundReport:
    """Bounds for theta(g x K_2) on an n-vertex graph g, n >= 2."""
    n = g.num_vertices
    if n < 2:
        raise PreconditionError("g_times_k2_bounds needs a graph on >= 2 vertices")
    if is_planar(times_k2(g)).planar:
        return BoundReport(1, 1, 1, (THM_3_4, PLANAR))
    lower = max(1, _ceil_div(g.num_edges, 2 * n - 2))
    upper = _ceil_div(n, 4)
    exact = lower if lower == upper else None
    return BoundReport(lower, upper, exact, (THM_3_4,))


def _theta_bipartite_report(a: int, b: int) -> BoundReport:
    """What this module knows about theta(K_{a,b})."""
    if min(a, b) <= 2:
        return BoundReport(1, 1, 1, (PLANAR,))
    if a == b:
        v = theta_knn(a)
        return BoundReport(v, v, v, (LEMMA_3_1,))
    lower = max(1, _ceil_div(a * b, 2 * (a + b) - 4))
    upper = theta_knn(max(a, b))  # K_{a,b} sits inside the larger balanced graph
    exact = lower if lower == upper else None
    tags = (EULER, LEMMA_3_1) if exact is not None else (EULER, LEMMA_3_1, OPEN)
    return BoundReport(lower, upper, exact, tags)


def theta_kmn_times_kpq(m: int, n: int, p: int, q: int) -> BoundReport:
    """Bounds for theta(K_{m,n} x K_{p,q}) = max over its two components."""
    for s in (m, n, p, q):
        if s < 1:
            raise InvalidSizeError(f"part sizes must be >= 1, got {(m, n, p, q)}")
    r1 = _theta_bipartite_report(m * p, n * q)
    r2 = _theta_bipartite_report(m * q, n * p)
    lower = max(r1.lower, r2.lower)
    upper = max(r1.upper, r2.upper)
    exact = None
    if r1.exact is not None and r2.exact is not None:
        exact = max(r1.exact, r2.exact)
    elif r1.exact is not None and r1.exact >= r2.upper:
        exact = r1.exact
    elif r2.exact is not None and r2.exact >= r1.upper:
        exact = r2.exact
    elif lower == upper:
        exact = lower
    if exact is not None:
        lower = upper = exact
    return BoundReport(lower, upper, exact, _dedup((THM_3_6,) + r1.provenance + r2.provenance))


def tripartite_times_k2_bounds(l: int, m: int, n: int) -> BoundReport:
    """Bounds for theta(K_{l,m,n} x K_2) with 1 <= l <= m <= n."""
    if not (1 <= l <= m <= n):
        raise PreconditionError(f"sizes must satisfy 1 <= l <= m <= n, got {(l, m, n)}")
    lower = max(1, _ceil_div(l * m + l * n + m * n, 2 * (l + m + n) - 2))
    rb = _theta_bipartite_report(m, n)
    if rb.exact is not None:
        upper = 2 * rb.exact
        tags = (THM_4_1,) + rb.provenance
    else:
        upper = 2 * rb.upper
        tags = (THM_4_1, OPEN) + rb.provenance
    exact = lower if lower == upper else None
    return BoundReport(lower, upper, exact, _dedup(tags))


def knn_report(n: int) -> BoundReport:
    """Exact report for theta(K_{n,n})."""
    v = theta_knn(n)
    return BoundReport(v, v, v, (LEMMA_3_1,))


def knnn_times_k2_report(n: int) -> BoundReport:
    """Exact report for theta(K_{n,n,n} x K_2) = ceil((n+1)/2)."""
    v = theta_knnn_times_k2(n)
    return BoundReport(v, v, v, (THM_4_7,))


def product_bounds_report(g: Graph, h: Graph) -> BoundReport:
    """Combined lower/upper report for theta(g x h)."""
    lower = product_lower_bound(g, h)
    upper = product_upper_bound(g, h)
    lower_tag = THM_2_2 if is_triangle_free(g) or is_triangle_free(h) else THM_2_1
    exact = lower if lower == upper else None
    return BoundReport(lower, upper, exact, (lower_tag, THM_3_4))
