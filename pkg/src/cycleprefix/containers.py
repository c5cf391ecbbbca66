"""Disjoint-path containers: statistics, the out/in neighbor pairing, leg-length
prediction, container assembly, and the length lower-bound witness.

For an ordered pair ``(x, y)`` in the full network, the container bundles
``delta`` internally vertex-disjoint paths from ``x`` to ``y``, each of length
at most ``dee + 2``.  Construction: normalize ``y`` to the standard origin,
pair every out-neighbor of ``x`` (except ``y`` itself) with a distinct
in-neighbor of the origin, join each pair by its unique shortest path, and map
everything back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, ParameterError, SameVertexError, UndefinedStatisticError
from .routing import _header_len, shortest_path
from .topology import (
    NetworkParams,
    Vertex,
    check_symbol,
    check_vertex,
    compose,
    high_symbol_sigma,
    invert_sigma,
    normalizing_sigma,
    origin_in_neighbor,
    relabel,
    standard_origin,
)


class CharTriple(NamedTuple):
    """Certificate statistics of a vertex relative to the standard origin."""

    alpha: int
    beta: int
    beta1: int


def first_out_of_band(x: Vertex, k: int, params: NetworkParams) -> int:
    """The first symbol of ``x`` outside the band ``{k+1, ..., dee+1}``, where
    ``k`` is the distance from ``x`` to the standard origin.

    Raises ``UndefinedStatisticError`` when every symbol lies in the band
    (possible only for the ``k = 1`` vertex ``2 3 ... dee dee+1``).
    """
    check_vertex(x, params)
    if not 1 <= k <= params.dee:
        raise DomainError(f"distance parameter k must be in 1..{params.dee}, got {k}")
    for s in x:
        if not k + 1 <= s <= params.dee + 1:
            return s
    raise UndefinedStatisticError(
        f"every symbol of {x} lies in {{{k + 1}..{params.dee + 1}}}; statistic undefined"
    )


def smallest_free_symbol(x: Vertex, i: int, k: int, params: NetworkParams) -> int:
    """The smallest symbol ``s > k`` that occurs to the right of ``i`` in ``x``
    or not at all, capped at ``dee + 2`` when no such ``s <= dee+1`` exists.

    ``k`` is the distance from ``x`` to the standard origin.  When ``i`` does
    not occur in ``x``, only absent symbols qualify.
    """
    check_vertex(x, params)
    check_symbol(i, params)
    if not 0 <= k <= params.dee:
        raise DomainError(f"distance parameter k must be in 0..{params.dee}, got {k}")
    pos = {s: p for p, s in enumerate(x)}
    pos_i = pos.get(i)
    for s in range(k + 1, params.dee + 2):
        p = pos.get(s)
        if p is None:
            return s
        if pos_i is not None and p > pos_i:
            return s
    return params.dee + 2


def char_triple(x: Vertex, params: NetworkParams) -> CharTriple:
    """The certificate triple ``(alpha, beta, beta1)`` of ``x`` relative to the
    standard origin: ``alpha`` is the first out-of-band symbol, ``beta`` the
    smallest free symbol past ``alpha``, ``beta1`` the smallest free symbol
    past symbol 1.  Distinct container paths carry distinct certificates.
    """
    params.require_full("char_triple")
    check_vertex(x, params)
    origin = standard_origin(params)
    if x == origin:
        raise SameVertexError("certificate statistics are undefined at the standard origin")
    k = _header_len(x, origin, params.dee)
    a = first_out_of_band(x, k, params)
    return CharTriple(
        alpha=a,
        beta=smallest_free_symbol(x, a, k, params),
        beta1=smallest_free_symbol(x, 1, k, params),
    )


def _normalized_state(x: Vertex, i: int, params: NetworkParams):
    """Shared setup for the pairing and the leg-length prediction.

    Renames the symbols of ``x`` above ``dee`` to ``dee+1, dee+2, ...`` in
    order of appearance (positional formulas below assume that shape), and
    returns the renamed vertex and symbol, the distance ``k`` to the origin,
    and the renaming map pair.
    """
    params.require_full("neighbor pairing")
    check_vertex(x, params)
    check_symbol(i, params)
    origin = standard_origin(params)
    if x == origin:
        raise SameVertexError("the pairing needs a source distinct from the destination")
    if i == x[0]:
        raise DomainError(f"symbol {i} already leads {x}; not an out-neighbor")
    if compose(i, x, params) == origin:
        raise DomainError(
            f"composing {i} reaches the destination directly; that neighbor is paired by the direct arc"
        )
    tau = high_symbol_sigma(x, params)
    xt = relabel(x, tau, params)
    it = tau[i]
    k = _header_len(xt, origin, params.dee)
    return xt, it, k, tau


def match_in_neighbor(x: Vertex, i: int, params: NetworkParams) -> int:
    """Pair the out-neighbor ``compose(i, x)`` with an in-neighbor index of the
    standard origin (the vertex being ``origin_in_neighbor(j, params)``).

    Over all admissible ``i`` the indices are distinct and cover exactly the
    in-neighbors other than ``x`` itself, which is what makes the assembled
    container internally disjoint.
    """
    xt, it, k, tau = _normalized_state(x, i, params)
    head = xt[0]
    if head == 1:
        jt = it
    elif head == k + 1:
        b1 = smallest_free_symbol(xt, 1, k, params)
        if it == 1:
            jt = k
        elif 1 < it < k:
            jt = it
        elif it == k:
            jt = b1 - 1
        elif k + 1 <= it < b1:
            jt = it - 1
        else:
            jt = it
    else:
        b1 = smallest_free_symbol(xt, 1, k, params)
        if it == 1:
            jt = b1 - 1
        elif 1 < it < k:
            jt = it
        elif it == k:
            jt = first_out_of_band(xt, k, params)
        elif k + 1 <= it < b1:
            jt = it - 1
        else:
            jt = it
    if not 2 <= jt <= params.delta + 1:
        raise AssertionError(f"pairing produced out-of-range index {jt} for x={x}, i={i}")
    return invert_sigma(tau)[jt]


def leg_distance(x: Vertex, i: int, params: NetworkParams) -> int:
    """Predicted length of the middle leg: the distance from ``compose(i, x)``
    to its paired in-neighbor of the standard origin.  Closed form; no search.
    """
    xt, it, k, _tau = _normalized_state(x, i, params)
    dee = params.dee
    head = xt[0]
    if head == 1:
        if 1 < it < k:
            return k
        if it == k:
            return k - 2
        if k < it <= dee:
            return it - 2
        return dee - 1
    if head == k + 1:
        b1 = smallest_free_symbol(xt, 1, k, params)
        if it == 1:
            return k - 1
        if 1 < it < k:
            return k
        if it == k:
            return k - 2
        if k + 1 <= it < b1:
            return it - 1
        if it <= dee + 1:
            return it - 2
        return dee - 1
    b1 = smallest_free_symbol(xt, 1, k, params)
    if it == 1:
        return b1 - 2
    if 1 < it < k:
        return k
    if it == k:
        return k - 1
    if k + 1 <= it < b1:
        return it - 1
    if it <= dee + 1:
        return it - 2
    return dee - 1


@dataclass(frozen=True)
class ContainerLeg:
    """How one container path was assembled.

    ``symbol`` is composed onto the source to reach ``neighbor``;
    ``in_neighbor`` is the paired penultimate vertex (None for the direct
    source->destination arc); ``predicted_length``/``actual_length`` describe
    the middle leg between them.
    """

    symbol: int
    neighbor: Vertex
    in_neighbor: Vertex | None
    predicted_length: int | None
    actual_length: int


@dataclass(frozen=True)
class Container:
    """A bundle of internally vertex-disjoint paths for one ordered pair."""

    src: Vertex
    dst: Vertex
    params: NetworkParams
    paths: tuple[tuple[Vertex, ...], ...]
    legs: tuple[ContainerLeg, ...]

    @property
    def width(self) -> int:
        return len(self.paths)

    @property
    def length(self) -> int:
        return max(len(p) - 1 for p in self.paths)


def build_container(x: Vertex, y: Vertex, params: NetworkParams) -> Container:
    """Build ``delta`` internally vertex-disjoint paths from ``x`` to ``y`` in
    the full network, each of length at most ``dee + 2``.

    One path per out-neighbor of ``x``: the neighbor equal to ``y`` (if any)
    contributes the direct arc; every other neighbor is joined by its unique
    shortest path to a distinct in-neighbor of ``y`` chosen by the pairing.
    """
    params.require_full("build_container")
    check_vertex(x, params)
    check_vertex(y, params)
    if x == y:
        raise SameVertexError(f"container requires distinct endpoints, got {x} twice")
    sigma = normalizing_sigma(y, params)
    inv = invert_sigma(sigma)
    xn = relabel(x, sigma, params)
    origin = standard_origin(params)
    paths: list[tuple[Vertex, ...]] = []
    legs: list[ContainerLeg] = []
    for s in params.alphabet:
        if s == x[0]:
            continue
        i = sigma[s]
        z = compose(i, xn, params)
        if z == origin:
            paths.append((x, y))
            legs.append(ContainerLeg(symbol=s, neighbor=y, in_neighbor=None,
                                     predicted_length=None, actual_length=0))
            continue
        j = match_in_neighbor(xn, i, params)
        yj = origin_in_neighbor(j, params)
        mid = (z,) if z == yj else shortest_path(z, yj, params)
        normalized_path = (xn,) + mid + (origin,)
        path = tuple(relabel(v, inv, params) for v in normalized_path)
        paths.append(path)
        legs.append(ContainerLeg(
            symbol=s,
            neighbor=relabel(z, inv, params),
            in_neighbor=relabel(yj, inv, params),
            predicted_length=leg_distance(xn, i, params),
            actual_length=len(mid) - 1,
        ))
    return Container(src=x, dst=y, params=params, paths=tuple(paths), legs=tuple(legs))


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the container-length lower-bound check.

    The source is the reversal-style extremal vertex; for every symbol ``i``
    strictly between 1 and ``dee``, composing ``i`` leaves the distance at the
    full ``dee`` and the unique shortest path is forced through one common
    vertex — so every container for the pair needs length ``dee + 2``.
    """

    source: Vertex
    target: Vertex
    ok: bool
    through_vertex: Vertex
    distances: dict[int, int]
    passes_through: dict[int, bool]
    skip_symbol: int
    skip_symbol_distance: int


def lower_bound_witness(params: NetworkParams) -> WitnessReport:
    """Check the extremal pair showing container length ``dee + 2`` is needed.

    The source lists the top ``dee`` symbols in decreasing order; the target is
    the standard origin.  Requires ``dee >= 4``.
    """
    params.require_full("lower_bound_witness")
    if params.dee < 4:
        raise ParameterError(f"the lower-bound witness needs dee >= 4, got {params.dee}")
    dee = params.dee
    src = tuple(range(params.delta + 1, params.delta + 1 - dee, -1))
    dst = standard_origin(params)
    through = tuple(range(2, dee + 1)) + (params.delta + 1,)
    distances: dict[int, int] = {}
    passes: dict[int, bool] = {}
    for i in range(2, dee):
        z = compose(i, src, params)
        distances[i] = _header_len(z, dst, dee)
        path = shortest_path(z, dst, params)
        passes[i] = through in path
    skip = _header_len(compose(dee, src, params), dst, dee)
    ok = all(d == dee for d in distances.values()) and all(passes.values()) and skip != dee
    return WitnessReport(
        source=src,
        target=dst,
        ok=ok,
        through_vertex=through,
        distances=distances,
        passes_through=passes,
        skip_symbol=dee,
        skip_symbol_distance=skip,
    )
