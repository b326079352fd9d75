"""Multisets, the n-valued group contract, axiom checkers and the growth engine.

An n-valued group multiplies two elements into an unordered n-multiset.  The
engine below never looks inside elements: it only needs them to be hashable
and totally ordered, so the same code serves the nonnegative integers and the
orbit classes of a coset group.
"""

from __future__ import annotations

import abc
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Hashable, Iterable, Sequence

from .errors import ResourceError, UsageError

DEFAULT_CAP = 10**7


class Multiset:
    """Immutable multiset stored as a sorted tuple.

    Two multisets are equal exactly when their canonical tuples are equal, so
    ``Multiset([8, 2]) == Multiset([2, 8])``.
    """

    __slots__ = ("elements",)

    def __init__(self, values: Iterable[Any], key: Callable | None = None):
        elements = tuple(sorted(values, key=key))
        if not elements:
            raise UsageError("a multiset needs at least one element")
        object.__setattr__(self, "elements", elements)

    def __setattr__(self, name, value):
        raise AttributeError("Multiset is immutable")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __contains__(self, item):
        return item in self.elements

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(("Multiset", self.elements))

    def __repr__(self):
        return "<" + ", ".join(map(repr, self.elements)) + ">"

    def support(self) -> frozenset:
        return frozenset(self.elements)

    def counts(self) -> Counter:
        return Counter(self.elements)

    def multiplicity(self, item) -> int:
        return self.elements.count(item)


def multiset_from(values: Sequence[Any], key: Callable | None = None) -> Multiset:
    """Canonical multiset of ``values``; raises :class:`UsageError` when empty."""
    return Multiset(values, key=key)


class MultiValuedGroup(abc.ABC):
    """Abstract n-valued group.

    Subclasses set ``n`` and ``unit`` and implement :meth:`mul` and :meth:`inv`.
    The axioms are not assumed; use :func:`check_associativity`,
    :func:`check_unit` and :func:`check_inverse`.
    """

    n: int
    unit: Hashable

    @abc.abstractmethod
    def mul(self, x, y) -> Multiset:
        """Return the n-multiset ``x * y``."""

    @abc.abstractmethod
    def inv(self, x):
        """Return the inverse element of ``x``."""

    def mul_support(self, x, y) -> set:
        """Distinct points of ``x * y``.

        The growth engine only needs supports, so subclasses with a cheaper
        route may override this.
        """
        return set(self.mul(x, y).elements)


class ZPlusGroup(MultiValuedGroup):
    """Nonnegative integers with ``x * y = [x + y, |x - y|]``."""

    n = 2
    unit = 0

    def mul(self, x: int, y: int) -> Multiset:
        return zplus_mul(x, y)

    def inv(self, x: int) -> int:
        return x

    def mul_support(self, x, y):
        return {x + y, abs(x - y)}

    def __repr__(self):
        return "ZPlusGroup()"


def zplus_mul(x: int, y: int) -> Multiset:
    if x < 0 or y < 0:
        raise UsageError(f"ZPlus elements are nonnegative, got {x}, {y}")
    return Multiset((abs(x - y), x + y))


def _flatten(products: Iterable[Multiset]) -> Multiset:
    return Multiset(z for p in products for z in p)


def check_associativity(G: MultiValuedGroup, x, y, z) -> bool:
    """Compare the n^2-multisets ``x*(y*z)_i`` and ``(x*y)_i*z``."""
    left = _flatten(G.mul(x, w) for w in G.mul(y, z))
    right = _flatten(G.mul(w, z) for w in G.mul(x, y))
    return left == right


def check_unit(G: MultiValuedGroup, x) -> bool:
    expected = Multiset([x] * G.n)
    return G.mul(G.unit, x) == expected and G.mul(x, G.unit) == expected


def check_inverse(G: MultiValuedGroup, x) -> bool:
    y = G.inv(x)
    return G.unit in G.mul(y, x) and G.unit in G.mul(x, y)


def _expand_chunk(args):
    G, chunk, g = args
    out = set()
    for x in chunk:
        out |= G.mul_support(x, g)
    return out


def _expand(G, frontier, g, executor, n_jobs):
    if executor is None or len(frontier) < 4096:
        out = set()
        for x in frontier:
            out |= G.mul_support(x, g)
        return out
    # sorted split keeps chunk contents independent of set iteration order
    items = sorted(frontier)
    size = -(-len(items) // n_jobs)
    chunks = [(G, items[i:i + size], g) for i in range(0, len(items), size)]
    out = set()
    for part in executor.map(_expand_chunk, chunks):
        out |= part
    return out


def growth_sequence(
    G: MultiValuedGroup,
    g,
    K: int,
    cap: int = DEFAULT_CAP,
    n_jobs: int = 1,
) -> list[int]:
    """Growth function values ``xi_0 .. xi_K`` of right multiplication by ``g``.

    ``xi_k`` counts the distinct points among the unit (the marked point) and
    the supports of ``g, g^2, ..., g^k``, where ``g^k`` is expanded as the
    union of supports of ``x * g`` over ``x`` in the support of ``g^(k-1)``.

    Raises :class:`ResourceError` when more than ``cap`` distinct points are
    reached; its ``partial`` attribute holds the completed prefix of the
    sequence.  With ``n_jobs > 1`` each frontier is expanded in worker
    processes; the result is identical to the serial run.
    """
    if K < 0:
        raise UsageError(f"K must be nonnegative, got {K}")
    if n_jobs < 1:
        raise UsageError(f"n_jobs must be positive, got {n_jobs}")
    visited = {G.unit}
    xi = [1]
    frontier = {g}
    executor = ProcessPoolExecutor(max_workers=n_jobs) if n_jobs > 1 else None
    try:
        for k in range(1, K + 1):
            if k > 1:
                frontier = _expand(G, frontier, g, executor, n_jobs)
            visited |= frontier
            if len(visited) > cap:
                raise ResourceError(
                    f"growth enumeration exceeded cap of {cap} points at k={k}",
                    partial=xi,
                )
            xi.append(len(visited))
    finally:
        if executor is not None:
            executor.shutdown()
    return xi


def new_counts(xi: Sequence[int]) -> list[int]:
    """Per-step counts of newly reached points: ``S_0 = 1``, ``S_k = xi_k - xi_{k-1}``."""
    if not xi or xi[0] != 1:
        raise UsageError("growth sequence must start with xi_0 = 1")
    out = [1]
    for prev, cur in zip(xi, xi[1:]):
        if cur < prev:
            raise UsageError("growth sequence must be non-decreasing")
        out.append(cur - prev)
    return out


def power_support_bruteforce(G: MultiValuedGroup, g, k: int) -> set:
    """Support of the fully expanded k-fold product ``(...((g*g)*g)...)*g``.

    Keeps every multiplicity, so the multiset grows like n^(k-1).  Intended as
    an oracle for small k only.
    """
    if k < 1:
        raise UsageError("k must be at least 1")
    current = [g]
    for _ in range(k - 1):
        current = [z for x in current for z in G.mul(x, g)]
    return set(current)
