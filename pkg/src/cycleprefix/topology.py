"""Vertices and arcs of rotation/shift networks on distinct-symbol words.

A network instance is parameterized by ``(delta, dee, r)``.  Vertices are the
words of length ``dee`` whose symbols are distinct and drawn from the alphabet
``1 .. delta+1``.  Each vertex ``x`` has out-degree ``delta - r``:

* rotations: for every position ``k`` in ``r+2 .. dee``, the word obtained by
  moving the symbol at position ``k`` to the front (the symbols before it all
  shift right by one);
* shifts: for every symbol ``y`` absent from ``x``, the word ``y x_1 ... x_{dee-1}``
  (the last symbol falls off).

With ``r = 0`` every rotation is available.  Choosing ``r > 0`` deletes the
``r`` shortest rotations (positions ``2 .. r+1``), which models losing one
outgoing link per vertex in a coordinated way; the first ``r + 1`` symbols of
a vertex then form its *dead angle*: an out-neighbor starting with symbol
``z`` exists if and only if ``z`` is outside the dead angle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import ParameterError, VertexError

Vertex = tuple[int, ...]
ArcOp = tuple[str, int]

ROTATION = "rotation"
SHIFT = "shift"


@dataclass(frozen=True)
class NetworkParams:
    """Parameters of one network instance.

    ``delta``: out-degree of the full network (alphabet has ``delta + 1`` symbols).
    ``dee``: word length; equals the diameter of the full network.
    ``r``: number of deleted rotations (positions ``2 .. r+1``), default 0.
    """

    delta: int
    dee: int
    r: int = 0

    def __post_init__(self) -> None:
        if not (isinstance(self.delta, int) and isinstance(self.dee, int) and isinstance(self.r, int)):
            raise ParameterError("delta, dee and r must be integers")
        if self.dee < 2:
            raise ParameterError(f"word length dee must be at least 2, got {self.dee}")
        if self.delta < self.dee:
            raise ParameterError(
                f"degree delta must be at least the word length dee, got delta={self.delta} < dee={self.dee}"
            )
        if not 0 <= self.r <= self.dee - 1:
            raise ParameterError(f"deleted-rotation count r must satisfy 0 <= r <= dee-1, got r={self.r}")

    @property
    def alphabet_size(self) -> int:
        return self.delta + 1

    @property
    def out_degree(self) -> int:
        return self.delta - self.r

    @property
    def alphabet(self) -> range:
        """The symbol alphabet ``1 .. delta+1``."""
        return range(1, self.delta + 2)

    def origin(self) -> Vertex:
        """The standard origin word ``(1, 2, ..., dee)``."""
        return tuple(range(1, self.dee + 1))

    def require_full(self, operation: str) -> None:
        """Raise unless ``r == 0`` (some operations are defined on the full network only)."""
        if self.r != 0:
            raise ParameterError(f"{operation} requires the full network (r=0), got r={self.r}")

    def require_route_regime(self, operation: str) -> None:
        """Raise unless ``dee >= 2*r + 2`` (needed for bounded rerouting)."""
        if self.dee < 2 * self.r + 2:
            raise ParameterError(
                f"{operation} requires dee >= 2*r + 2, got dee={self.dee}, r={self.r}"
            )

    def require_reach_regime(self, operation: str) -> None:
        """Raise unless ``dee >= 2*r + 3`` (needed for exact-length reachability)."""
        if self.dee < 2 * self.r + 3:
            raise ParameterError(
                f"{operation} requires dee >= 2*r + 3, got dee={self.dee}, r={self.r}"
            )


def standard_origin(params: NetworkParams) -> Vertex:
    """The word ``(1, 2, ..., dee)``, used as the canonical routing destination."""
    return params.origin()


def check_vertex(x: Vertex, params: NetworkParams) -> Vertex:
    """Validate a vertex: correct length, distinct symbols, symbols in the alphabet."""
    if not isinstance(x, tuple):
        raise VertexError(f"vertex must be a tuple of symbols, got {type(x).__name__}")
    if len(x) != params.dee:
        raise VertexError(f"vertex must have {params.dee} symbols, got {len(x)}")
    seen = set()
    for s in x:
        if not isinstance(s, int) or not 1 <= s <= params.delta + 1:
            raise VertexError(f"symbol {s!r} outside alphabet 1..{params.delta + 1}")
        if s in seen:
            raise VertexError(f"repeated symbol {s} in vertex {x}")
        seen.add(s)
    return x


def check_symbol(s: int, params: NetworkParams) -> int:
    if not isinstance(s, int) or not 1 <= s <= params.delta + 1:
        raise VertexError(f"symbol {s!r} outside alphabet 1..{params.delta + 1}")
    return s


def vertex_count(params: NetworkParams) -> int:
    """Number of vertices: falling factorial (delta+1)(delta)...(delta-dee+2)."""
    n = 1
    for t in range(params.delta + 1, params.delta + 1 - params.dee, -1):
        n *= t
    return n


def arc_count(params: NetworkParams) -> int:
    """Number of arcs: every vertex has out-degree delta - r."""
    return vertex_count(params) * params.out_degree


def iter_vertices(params: NetworkParams) -> Iterator[Vertex]:
    """All vertices in lexicographic order."""
    return itertools.permutations(params.alphabet, params.dee)


def rotate(x: Vertex, k: int, params: NetworkParams) -> Vertex:
    """Move the symbol at position ``k`` (1-based) to the front.

    Positions ``2 .. r+1`` are deleted when ``r > 0`` and raise ``ParameterError``.
    """
    check_vertex(x, params)
    if not 2 <= k <= params.dee:
        raise ParameterError(f"rotation position must be in 2..{params.dee}, got {k}")
    if k <= params.r + 1:
        raise ParameterError(f"rotation position {k} is deleted when r={params.r}")
    return (x[k - 1],) + x[: k - 1] + x[k:]


def shift(x: Vertex, y: int, params: NetworkParams) -> Vertex:
    """Prepend an absent symbol ``y`` and drop the last symbol."""
    check_vertex(x, params)
    check_symbol(y, params)
    if y in x:
        raise VertexError(f"shift symbol {y} already occurs in {x}")
    return (y,) + x[:-1]


def compose(i: int, x: Vertex, params: NetworkParams) -> Vertex:
    """Produce the out-neighbor of ``x`` whose word starts with symbol ``i``.

    If ``i`` equals the first symbol of ``x`` the result is ``x`` itself (no
    move).  Otherwise the unique arc used is the rotation that fronts ``i``
    when ``i`` occurs in ``x``, or the shift that inserts ``i`` when it does
    not.  Deleted rotations raise ``ParameterError``.
    """
    check_vertex(x, params)
    check_symbol(i, params)
    if i == x[0]:
        return x
    try:
        k = x.index(i) + 1
    except ValueError:
        return shift(x, i, params)
    return rotate(x, k, params)


def dead_angle(x: Vertex, r: int) -> frozenset[int]:
    """The first ``r + 1`` symbols of ``x``: the prefixes unreachable in one step.

    An out-neighbor of ``x`` starting with ``z`` exists iff ``z`` is not here.
    """
    if not 0 <= r <= len(x) - 1:
        raise ParameterError(f"deleted-rotation count r must satisfy 0 <= r <= {len(x) - 1}, got {r}")
    return frozenset(x[: r + 1])


def out_neighbors(x: Vertex, params: NetworkParams) -> set[Vertex]:
    """All out-neighbors of ``x`` (size ``delta - r``)."""
    return {v for _, v in arcs_from(x, params)}


def arcs_from(x: Vertex, params: NetworkParams) -> list[tuple[ArcOp, Vertex]]:
    """Outgoing arcs of ``x`` as ``((kind, value), neighbor)`` pairs.

    Rotations come first ordered by position, then shifts ordered by symbol;
    ``value`` is the rotation position or the inserted symbol respectively.
    """
    check_vertex(x, params)
    arcs: list[tuple[ArcOp, Vertex]] = []
    for k in range(params.r + 2, params.dee + 1):
        arcs.append(((ROTATION, k), (x[k - 1],) + x[: k - 1] + x[k:]))
    present = set(x)
    for y in params.alphabet:
        if y not in present:
            arcs.append(((SHIFT, y), (y,) + x[:-1]))
    return arcs


def arc_op(u: Vertex, v: Vertex, params: NetworkParams) -> ArcOp:
    """Classify the arc ``u -> v``; raises ``VertexError`` if it is not an arc."""
    check_vertex(u, params)
    check_vertex(v, params)
    head = v[0]
    if head in u:
        k = u.index(head) + 1
        if k >= params.r + 2 and v == (u[k - 1],) + u[: k - 1] + u[k:]:
            return (ROTATION, k)
    elif v == (head,) + u[:-1]:
        return (SHIFT, head)
    raise VertexError(f"no arc from {u} to {v}")


def is_arc(u: Vertex, v: Vertex, params: NetworkParams) -> bool:
    try:
        arc_op(u, v, params)
    except VertexError:
        return False
    return True


def origin_in_neighbor(i: int, params: NetworkParams) -> Vertex:
    """The in-neighbor of the standard origin indexed by symbol ``i``.

    For ``2 <= i <= dee`` it is ``(2, 3, ..., i, 1, i+1, ..., dee)`` (the word
    that rotates back to the origin); for ``dee < i <= delta+1`` it is
    ``(2, 3, ..., dee, i)`` (the word that shifts symbol 1 in).  Index 1 is,
    by convention, the origin itself and is accepted here.
    """
    dee = params.dee
    if not 1 <= i <= params.delta + 1:
        raise VertexError(f"in-neighbor index must be in 1..{params.delta + 1}, got {i}")
    if i == 1:
        return params.origin()
    if i <= dee:
        return tuple(range(2, i + 1)) + (1,) + tuple(range(i + 1, dee + 1))
    return tuple(range(2, dee + 1)) + (i,)


def in_neighbors(y: Vertex, params: NetworkParams) -> set[Vertex]:
    """All in-neighbors of ``y`` (size ``delta - r``).

    Rotations from positions ``r+2 .. dee`` contribute one in-neighbor each;
    every symbol absent from ``y`` contributes one shift in-neighbor.
    """
    check_vertex(y, params)
    sigma = normalizing_sigma(y, params)
    inv = invert_sigma(sigma)
    result = set()
    for i in range(params.r + 2, params.dee + 1):
        result.add(relabel(origin_in_neighbor(i, params), inv, params))
    for i in range(params.dee + 1, params.delta + 2):
        result.add(relabel(origin_in_neighbor(i, params), inv, params))
    return result


def relabel(x: Vertex, sigma: Mapping[int, int], params: NetworkParams) -> Vertex:
    """Apply an alphabet permutation symbol-wise to a vertex."""
    check_vertex(x, params)
    image = tuple(sigma[s] for s in x)
    return check_vertex(image, params)


def normalizing_sigma(y: Vertex, params: NetworkParams) -> dict[int, int]:
    """The alphabet permutation sending ``y`` to the standard origin.

    Symbol ``y_j`` maps to ``j``; the remaining symbols map to
    ``dee+1, dee+2, ...`` in increasing order.
    """
    check_vertex(y, params)
    sigma = {s: j + 1 for j, s in enumerate(y)}
    rest = sorted(set(params.alphabet) - set(y))
    for offset, s in enumerate(rest):
        sigma[s] = params.dee + 1 + offset
    return sigma


def high_symbol_sigma(x: Vertex, params: NetworkParams) -> dict[int, int]:
    """An alphabet permutation fixing ``1 .. dee`` that renames the symbols of
    ``x`` larger than ``dee`` to ``dee+1, dee+2, ...`` in order of appearance.

    Statistics of a vertex relative to the standard origin only depend on
    which symbols exceed ``dee``, so this canonical renaming lets positional
    formulas assume the large symbols appear in increasing order.
    """
    check_vertex(x, params)
    sigma = {s: s for s in range(1, params.dee + 1)}
    high_in_x = [s for s in x if s > params.dee]
    for offset, s in enumerate(high_in_x):
        sigma[s] = params.dee + 1 + offset
    used = set(sigma.values())
    remaining_targets = [t for t in params.alphabet if t not in used]
    remaining_sources = [s for s in params.alphabet if s not in sigma]
    for s, t in zip(remaining_sources, remaining_targets):
        sigma[s] = t
    return sigma


def invert_sigma(sigma: Mapping[int, int]) -> dict[int, int]:
    inv = {v: k for k, v in sigma.items()}
    if len(inv) != len(sigma):
        raise VertexError("alphabet map is not a bijection")
    return inv


def vertex_to_text(x: Vertex, params: NetworkParams) -> str:
    """Render a vertex: digit string when the alphabet fits in 1..9, else
    hyphen-joined numbers (e.g. ``10-3-1-2``)."""
    check_vertex(x, params)
    if params.delta + 1 <= 9:
        return "".join(str(s) for s in x)
    return "-".join(str(s) for s in x)


def vertex_from_text(text: str, params: NetworkParams) -> Vertex:
    """Parse a vertex from digit-string or hyphen-joined form."""
    if not isinstance(text, str) or not text:
        raise VertexError("vertex text must be a non-empty string")
    if "-" in text:
        try:
            symbols = tuple(int(part) for part in text.split("-"))
        except ValueError:
            raise VertexError(f"malformed vertex text {text!r}") from None
    else:
        if not text.isdigit():
            raise VertexError(f"malformed vertex text {text!r}")
        symbols = tuple(int(ch) for ch in text)
    return check_vertex(symbols, params)
