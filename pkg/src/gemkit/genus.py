"""Regular-genus machinery, gem-complexity and the lower-bound formulas.

Genus values are exact rationals with denominator 1 or 2.  They are
reported verbatim; a non-integral value on a well-formed gem is
surfaced as a diagnostic rather than rounded away.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .core import ColoredGraph, GemError, ResidueCensus, census, face_vector, validate
from .constructions import double


Scheme = tuple[int, ...]


def canonical_scheme(scheme: Scheme) -> Scheme:
    """Reversal-canonical form: the cycle read in whichever direction is
    lexicographically smaller, keeping the last color fixed at the end."""
    head = scheme[:-1]
    return min(head, head[::-1]) + scheme[-1:]


def enumerate_schemes(d: int) -> list[Scheme]:
    """All cyclic color orderings ending in d, deduplicated by reversal.

    For d = 4 there are 4!/2 = 12 of them, in lexicographic order.
    """
    if d < 2:
        raise GemError("schemes need dimension >= 2")
    seen = set()
    out = []
    for head in itertools.permutations(range(d)):
        scheme = canonical_scheme(head + (d,))
        if scheme not in seen:
            seen.add(scheme)
            out.append(scheme)
    return sorted(out)


def _check_scheme(g: ColoredGraph, scheme: Scheme) -> None:
    d = g.dimension
    if len(scheme) != d + 1 or scheme[-1] != d or sorted(scheme) != list(
        range(d + 1)
    ):
        raise GemError(f"scheme {scheme} is not a color cycle for d={d}")


@dataclass(frozen=True)
class SchemeProfile:
    """Genus data of one embedding scheme: the surface Euler
    characteristic, its hole count, and the resulting genus value."""

    scheme: Scheme
    chi: int
    holes: int
    rho: Fraction


@dataclass(frozen=True)
class GenusProfile:
    """Per-scheme genus table plus the minimizing scheme.

    `rho` is the minimum over all schemes; ties resolve to the
    lexicographically smallest canonical scheme.  `diagnostics` carries
    warnings such as non-integral values.
    """

    entries: tuple[SchemeProfile, ...]
    rho: Fraction
    argmin: Scheme
    diagnostics: tuple[str, ...] = ()


def rho_epsilon(
    g: ColoredGraph, scheme: Scheme, counts: ResidueCensus | None = None
) -> SchemeProfile:
    """Genus of the regular embedding surface for one scheme.

    chi = sum of bicolored cycle counts over cyclically adjacent color
    pairs, plus (1-d) per internal vertex pair and (2-d) per boundary
    vertex pair; the hole count is the boundary cycle count of the pair
    (first color, color before last).
    """
    _check_scheme(g, scheme)
    if counts is None:
        counts = census(g)
    d = g.dimension
    cycle_sum = sum(
        counts.g_dot_of(scheme[i], scheme[(i + 1) % (d + 1)])
        for i in range(d + 1)
    )
    tally = counts.tally
    chi = cycle_sum + (1 - d) * tally.p_dot + (2 - d) * tally.p_bar
    holes = counts.boundary_g_of(scheme[0], scheme[d - 1]) if tally.p_bar else 0
    rho = 1 - Fraction(chi, 2) - Fraction(holes, 2)
    return SchemeProfile(scheme=scheme, chi=chi, holes=holes, rho=rho)


def _require_bounded_crystallization(g: ColoredGraph) -> int:
    if g.dimension != 4:
        raise GemError("this genus formula is specific to dimension 4")
    report = validate(g)
    if not report.is_crystallization:
        raise GemError("input is not a crystallization")
    if report.h < 1:
        raise GemError("input is closed; this formula needs boundary")
    return report.h


def rho_epsilon_via_double(g: ColoredGraph, scheme: Scheme) -> Fraction:
    """Scheme genus from the census of the doubled graph.

    Evaluates -1 - 4h + 2*chi + (1/2) * sum over the cycle of the
    doubled graph's triple counts at cyclic distance-2 steps, minus half
    the boundary cycle count of the (first, fourth) color pair.
    """
    h = _require_bounded_crystallization(g)
    _check_scheme(g, scheme)
    doubled, _ = double(g)
    doubled_census = census(doubled)
    chi = face_vector(g).euler_characteristic
    triple_sum = sum(
        doubled_census.g_of(
            scheme[i % 5], scheme[(i + 2) % 5], scheme[(i + 4) % 5]
        )
        for i in range(5)
    )
    boundary_pairs = census(g).boundary_g_of(scheme[0], scheme[3])
    return (
        -1 - 4 * h + 2 * chi + Fraction(triple_sum, 2)
        - Fraction(boundary_pairs, 2)
    )


def rho_epsilon_census(
    g: ColoredGraph, scheme: Scheme, counts: ResidueCensus | None = None
) -> Fraction:
    """Scheme genus straight from the input's own residue census,
    without building the double."""
    h = _require_bounded_crystallization(g)
    _check_scheme(g, scheme)
    if counts is None:
        counts = census(g)
    chi = face_vector(g).euler_characteristic
    e0, e1, e2, e3, _ = scheme
    return Fraction(
        -1 - 4 * h + 2 * chi
        + counts.g_of(e0, e1, e3)
        + counts.g_of(e0, e2, e3)
        + counts.g_of(e1, e3, 4)
        + counts.g_dot_of(e0, e2, 4)
        + counts.g_dot_of(e1, e2, 4)
    )


def regular_genus(g: ColoredGraph, cross_check: bool = True) -> GenusProfile:
    """Minimum scheme genus over all schemes.

    For 4-dimensional crystallizations with boundary, every scheme is
    additionally evaluated through the doubled-graph formula and the
    direct census formula; any disagreement signals an encoding bug and
    raises instead of being ignored.
    """
    counts = census(g)
    entries = tuple(
        rho_epsilon(g, scheme, counts) for scheme in enumerate_schemes(g.dimension)
    )
    diagnostics = []
    for entry in entries:
        if entry.rho.denominator != 1:
            diagnostics.append(
                f"non-integral genus {entry.rho} at scheme {entry.scheme}"
            )
    if cross_check and g.dimension == 4 and not g.is_closed():
        report = validate(g)
        if report.is_crystallization:
            for entry in entries:
                via_double = rho_epsilon_via_double(g, entry.scheme)
                via_census = rho_epsilon_census(g, entry.scheme, counts)
                if not (entry.rho == via_double == via_census):
                    raise GemError(
                        f"genus formulas disagree at scheme {entry.scheme}: "
                        f"{entry.rho} (embedding) vs {via_double} (double) "
                        f"vs {via_census} (census)"
                    )
    best = min(entries, key=lambda e: (e.rho, e.scheme))
    return GenusProfile(
        entries=entries,
        rho=best.rho,
        argmin=best.scheme,
        diagnostics=tuple(diagnostics),
    )


def gem_complexity(g: ColoredGraph) -> int:
    """Half the vertex count minus one, for crystallizations.

    This is the complexity contributed by this particular gem; it upper
    bounds the manifold's gem-complexity, with equality whenever a
    matching lower bound certifies minimality.
    """
    if not validate(g).is_crystallization:
        raise GemError("gem complexity is defined for crystallizations")
    return g.vertex_count // 2 - 1


@dataclass(frozen=True)
class ManifoldMeta:
    """Manifold facts used by the bound formulas.

    `h` and `chi` are derivable from a gem; the fundamental-group rank
    `m` must be supplied by the user (only an upper bound is computable
    combinatorially), as must the boundary genus and the rank of the
    double's fundamental group when the corresponding bounds are wanted.
    """

    h: int
    chi: int
    m: int
    boundary_genus: int | None = None
    double_rank: int | None = None

    @classmethod
    def for_graph(
        cls,
        g: ColoredGraph,
        m: int,
        boundary_genus: int | None = None,
        double_rank: int | None = None,
    ) -> "ManifoldMeta":
        report = validate(g)
        return cls(
            h=report.h,
            chi=face_vector(g).euler_characteristic,
            m=m,
            boundary_genus=boundary_genus,
            double_rank=double_rank,
        )


def _require_boundary_meta(meta: ManifoldMeta) -> None:
    if meta.h < 1:
        raise GemError("this bound assumes at least one boundary component")


def complexity_lower_bounds(
    meta: ManifoldMeta, k_boundary: int | None = None
) -> tuple[int, int | None]:
    """Gem-complexity lower bounds.

    Returns 3*chi + 7m + 7h - 10 and, when the boundary's gem-complexity
    is supplied, k_boundary + 3*chi + 4m + 6h - 9.
    """
    _require_boundary_meta(meta)
    first = 3 * meta.chi + 7 * meta.m + 7 * meta.h - 10
    second = (
        k_boundary + 3 * meta.chi + 4 * meta.m + 6 * meta.h - 9
        if k_boundary is not None
        else None
    )
    return first, second


def vertex_lower_bounds(meta: ManifoldMeta) -> tuple[int, int, int]:
    """Lower bounds on 2p, 2p + 2p_bar and 2p - 2p_bar."""
    _require_boundary_meta(meta)
    return (
        6 * meta.chi + 14 * meta.m + 14 * meta.h - 18,
        6 * meta.chi + 20 * meta.m + 16 * meta.h - 18,
        6 * meta.chi + 8 * meta.m + 12 * meta.h - 18,
    )


def genus_lower_bounds(
    meta: ManifoldMeta,
) -> tuple[int | None, int, int | None]:
    """Regular-genus lower bounds.

    Returns (2*chi + 2*double_rank - 2 when the double's rank is known,
    2*chi + 3m + 2h - 4 always, boundary_genus + 2*chi + 2m + 2h - 4
    when the boundary genus is known).
    """
    _require_boundary_meta(meta)
    first = (
        2 * meta.chi + 2 * meta.double_rank - 2
        if meta.double_rank is not None
        else None
    )
    second = 2 * meta.chi + 3 * meta.m + 2 * meta.h - 4
    third = (
        meta.boundary_genus + 2 * meta.chi + 2 * meta.m + 2 * meta.h - 4
        if meta.boundary_genus is not None
        else None
    )
    return first, second, third


def rank_upper_bound(g: ColoredGraph) -> int:
    """Combinatorial cap on the fundamental-group rank.

    Minimum over unordered color pairs {a, b} of
    g(drop a and b) - g(drop a) - g(drop b) + 1.
    """
    if not validate(g).is_crystallization:
        raise GemError("rank bound is defined for crystallizations")
    counts = census(g)
    full = set(g.colors)
    best = None
    for a, b in itertools.combinations(sorted(full), 2):
        value = (
            counts.g[frozenset(full - {a, b})]
            - counts.g[frozenset(full - {a})]
            - counts.g[frozenset(full - {b})]
            + 1
        )
        best = value if best is None else min(best, value)
    return best


def boundary_genus_cap(g: ColoredGraph) -> int:
    """Upper bound on the summed boundary genus: min over color pairs of
    the boundary cycle count minus the number of boundary components."""
    counts = census(g)
    if counts.tally.boundary == 0:
        raise GemError("boundary genus cap needs a nonempty boundary")
    h = len(counts.component_boundary_g)
    return min(
        counts.boundary_g_of(i, j) - h
        for i, j in itertools.combinations(range(g.dimension), 2)
    )


@dataclass(frozen=True)
class RelabelingCheck:
    """Weak semi-simplicity conditions under one relabeling of the
    non-last colors."""

    relabeling: tuple[int, int, int, int]
    type_one: bool | None
    type_two: bool


@dataclass(frozen=True)
class WeakSemiSimpleReport:
    checks: tuple[RelabelingCheck, ...]
    type_one: bool | None
    type_two: bool


def weak_semi_simple(g: ColoredGraph, meta: ManifoldMeta) -> WeakSemiSimpleReport:
    """Recognize weak semi-simplicity of either type.

    The defining census equalities are stated relative to a color
    ordering, so they are checked under every relabeling of colors
    0..3 with the last color fixed.  Type I needs the boundary genus in
    `meta`; when it is absent the type I verdict is None.
    """
    h = _require_bounded_crystallization(g)
    if meta.m is None:
        raise GemError("weak semi-simplicity needs the rank m in meta")
    counts = census(g)
    checks = []
    for sigma in itertools.permutations(range(4)):
        s0, s1, s2, s3 = sigma
        common = (
            counts.g_of(s0, s1, s2) == meta.m + h
            and counts.g_of(s1, s2, s3) == meta.m + h
            and counts.g_dot_of(s2, s3, 4) == h - 1
            and counts.g_dot_of(s0, s3, 4) == h - 1
        )
        g014 = counts.g_of(s0, s1, 4)
        type_two = common and g014 == meta.m + 2 * h - 1
        if meta.boundary_genus is None:
            type_one = None
        else:
            type_one = common and g014 == meta.boundary_genus + 2 * h - 1
        checks.append(
            RelabelingCheck(relabeling=sigma, type_one=type_one, type_two=type_two)
        )
    if meta.boundary_genus is None:
        overall_one = None
    else:
        overall_one = any(c.type_one for c in checks)
    return WeakSemiSimpleReport(
        checks=tuple(checks),
        type_one=overall_one,
        type_two=any(c.type_two for c in checks),
    )


@dataclass(frozen=True)
class MinimalityReport:
    """Comparison of a gem's attained complexity/size/genus against the
    lower bounds computed from its manifold metadata."""

    complexity: int
    complexity_bound: int
    complexity_certified: bool
    vertex_counts: tuple[int, int, int]
    vertex_bounds: tuple[int, int, int]
    vertex_bounds_attained: tuple[bool, bool, bool]
    rho: Fraction
    genus_bound: int
    genus_bound_attained: bool


def certify_minimal(g: ColoredGraph, meta: ManifoldMeta) -> MinimalityReport:
    """Certify minimality by matching attained values against bounds."""
    complexity = gem_complexity(g)
    bound, _ = complexity_lower_bounds(meta)
    tally = g.vertex_tally()
    attained = (
        tally.total,
        tally.total + tally.boundary,
        tally.total - tally.boundary,
    )
    vbounds = vertex_lower_bounds(meta)
    profile = regular_genus(g)
    _, genus_bound, _ = genus_lower_bounds(meta)
    return MinimalityReport(
        complexity=complexity,
        complexity_bound=bound,
        complexity_certified=complexity == bound,
        vertex_counts=attained,
        vertex_bounds=vbounds,
        vertex_bounds_attained=tuple(
            a == b for a, b in zip(attained, vbounds)
        ),
        rho=profile.rho,
        genus_bound=genus_bound,
        genus_bound_attained=profile.rho == genus_bound,
    )
