"""The s-valued coset group of a free product of s copies of Z/m.

Elements are orbit classes of reduced words under the generator shift
``phi: a_i -> a_{i+1}``.  The product of two classes is the multiset of the
classes of ``u * phi^j(v)`` for ``j = 0 .. s-1``.
"""

from __future__ import annotations

from .errors import UsageError
from .freeproduct import (
    GroupSpec,
    OrbitClass,
    apply_phi,
    canonical,
    enumerate_normal_words,
    invert,
    join,
    parse_word,
    _shift_table,
)
from .multiset import Multiset, MultiValuedGroup, zplus_mul


class CosetGroup(MultiValuedGroup):
    def __init__(self, s: int, m: int):
        self.spec = GroupSpec(s, m)
        self.n = s
        self.unit = OrbitClass("")
        self._tables = [_shift_table(s, j) for j in range(s)]

    def __repr__(self):
        return f"CosetGroup(s={self.spec.s}, m={self.spec.m})"

    def __eq__(self, other):
        return isinstance(other, CosetGroup) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __reduce__(self):
        return (CosetGroup, (self.spec.s, self.spec.m))

    def element(self, text: str) -> OrbitClass:
        """Class of the word written in letter format, e.g. ``"ab"``."""
        return canonical(parse_word(text, self.spec), self.spec)

    def generator(self) -> OrbitClass:
        """The class ``[a_1, ..., a_s]`` of a single generator."""
        return OrbitClass("a")

    def _products(self, x: str, y: str):
        m = self.spec.m
        canon = self._tables
        for table in self._tables:
            w = join(x, y.translate(table), m)
            yield OrbitClass(w.translate(canon[-(ord(w[0]) - 97)])) if w else self.unit

    def mul(self, x, y) -> Multiset:
        return Multiset(self._products(x, y))

    def mul_support(self, x, y):
        return set(self._products(x, y))

    def inv(self, x) -> OrbitClass:
        return canonical(invert(x, self.spec), self.spec)

    def classes(self, length: int) -> list[OrbitClass]:
        """All classes whose words have exactly ``length`` letters."""
        return [OrbitClass(w) for w in enumerate_normal_words(self.spec, length, True)]

    def classes_up_to(self, max_length: int) -> list[OrbitClass]:
        return [c for k in range(max_length + 1) for c in self.classes(k)]


def coset_mul(x, y, spec: GroupSpec) -> Multiset:
    """Multiset ``[class(rep(x) * phi^j(rep(y))) : j = 0 .. s-1]``.

    ``x`` and ``y`` may be any representatives of their classes.
    """
    return Multiset(
        canonical(join(x, apply_phi(y, j, spec), spec.m), spec) for j in range(spec.s)
    )


def zplus_isomorphism_check(N: int) -> bool:
    """Check that ``u_k -> k`` carries the (s=2, m=2) coset product onto ZPlus.

    ``u_k`` is the unique class of letter-length ``k``; all pairs ``k, l <= N``
    are compared.
    """
    if N < 0:
        raise UsageError(f"N must be nonnegative, got {N}")
    G = CosetGroup(2, 2)
    spec = G.spec
    u = []
    for k in range(2 * N + 1):
        words = enumerate_normal_words(spec, k, first_gen_zero=True)
        if len(words) != 1:
            return False
        u.append(OrbitClass(words[0]))
    index = {c: k for k, c in enumerate(u)}
    if G.inv(u[0]) != u[0] or index[u[0]] != 0:
        return False
    for k in range(N + 1):
        for l in range(N + 1):
            image = Multiset(index[c] for c in G.mul(u[k], u[l]))
            if image != zplus_mul(k, l):
                return False
    return True
