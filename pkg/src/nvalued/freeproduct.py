"""Words in the free product of ``s`` copies of Z/m.

A reduced word is stored as its expanded letter string: generator ``i`` is the
letter ``chr(ord('a') + i)`` and ``a^2 b`` is ``"aab"``.  In this encoding the
normal form condition is simply "no run of m or more equal letters", the
letter-length is ``len``, and Python's string order is exactly the
lexicographic order on letter sequences (``a < b < c``, proper prefix first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, NamedTuple

from .errors import UsageError

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
EMPTY_SYMBOL = "Λ"


@dataclass(frozen=True)
class GroupSpec:
    """Free product of ``s`` cyclic groups, each of order ``m``."""

    s: int
    m: int

    def __post_init__(self):
        if not 2 <= self.s <= len(ALPHABET):
            raise UsageError(f"s must lie in [2, {len(ALPHABET)}], got {self.s}")
        if self.m < 2:
            raise UsageError(f"m must be at least 2, got {self.m}")

    @property
    def letters(self) -> str:
        return ALPHABET[: self.s]


class Syllable(NamedTuple):
    gen: int
    exp: int


class NormalWord(str):
    """A reduced word, as its letter string.

    Behaves like ``str`` for hashing, equality and ordering.
    """

    __slots__ = ()

    @property
    def syllables(self) -> tuple[Syllable, ...]:
        return tuple(
            Syllable(ord(c) - 97, sum(1 for _ in run)) for c, run in groupby(self)
        )

    @property
    def letter_length(self) -> int:
        return len(self)

    def render(self) -> str:
        return str(self)

    def __repr__(self):
        return f"NormalWord({str(self) or EMPTY_SYMBOL!s})"


class OrbitClass(NormalWord):
    """Canonical representative of a word's orbit under the generator shift.

    Either empty, or starting with the first generator ``a``.
    """

    __slots__ = ()

    @property
    def rep(self) -> NormalWord:
        return NormalWord(self)

    def __repr__(self):
        return f"[{str(self) or EMPTY_SYMBOL}]"


IDENTITY = NormalWord("")


def _check_gen(gen: int, spec: GroupSpec):
    if not 0 <= gen < spec.s:
        raise UsageError(f"generator {gen} out of range for s={spec.s}")


def from_syllables(syllables: Iterable[tuple[int, int]]) -> NormalWord:
    return NormalWord("".join(ALPHABET[g] * e for g, e in syllables))


def reduce(raw: Iterable[tuple[int, int]], spec: GroupSpec) -> NormalWord:
    """Reduce a sequence of ``(gen, exp)`` pairs to normal form.

    Exponents are taken mod ``m``, equal neighbouring generators merge and
    zero syllables vanish, cascading until nothing changes.
    """
    stack: list[list[int]] = []
    for gen, exp in raw:
        _check_gen(gen, spec)
        exp %= spec.m
        if not exp:
            continue
        if stack and stack[-1][0] == gen:
            merged = (stack[-1][1] + exp) % spec.m
            if merged:
                stack[-1][1] = merged
            else:
                stack.pop()
        else:
            stack.append([gen, exp])
    return from_syllables(stack)


def is_normal(word: str, spec: GroupSpec) -> bool:
    letters = spec.letters
    run = 0
    prev = None
    for c in word:
        if c not in letters:
            return False
        run = run + 1 if c == prev else 1
        if run >= spec.m:
            return False
        prev = c
    return True


def parse_word(text: str, spec: GroupSpec) -> NormalWord:
    """Parse the letter format (``"aab"``; ``""`` or ``"Λ"`` for the identity).

    The text must already be in normal form.
    """
    if text == EMPTY_SYMBOL:
        text = ""
    if not is_normal(text, spec):
        raise UsageError(f"{text!r} is not a normal word for s={spec.s}, m={spec.m}")
    return NormalWord(text)


def join(u: str, v: str, m: int) -> str:
    """Product of two reduced letter strings, reduced.

    Both factors are already reduced, so cancellation only happens at the
    junction.
    """
    while u and v and u[-1] == v[0]:
        c = u[-1]
        p = len(u) - len(u.rstrip(c))
        q = len(v) - len(v.lstrip(c))
        t = (p + q) % m
        u = u[:-p]
        v = v[q:]
        if t:
            return u + c * t + v
    return u + v


def multiply(u: str, v: str, spec: GroupSpec) -> NormalWord:
    return NormalWord(join(u, v, spec.m))


@lru_cache(maxsize=None)
def _shift_table(s: int, j: int) -> dict:
    j %= s
    src = ALPHABET[:s]
    return str.maketrans(src, src[j:] + src[:j])


def apply_phi(w: str, j: int, spec: GroupSpec) -> NormalWord:
    """Apply the j-th power of the automorphism ``a_i -> a_{i+1}`` (indices mod s)."""
    return NormalWord(w.translate(_shift_table(spec.s, j)))


def canonical(w: str, spec: GroupSpec) -> OrbitClass:
    """The unique image of ``w`` under a generator shift that starts with ``a``."""
    if not w:
        return OrbitClass("")
    return OrbitClass(w.translate(_shift_table(spec.s, -(ord(w[0]) - 97))))


def invert(w: str, spec: GroupSpec) -> NormalWord:
    return NormalWord(
        "".join(c * (spec.m - sum(1 for _ in run)) for c, run in groupby(reversed(w)))
    )


def enumerate_normal_words(
    spec: GroupSpec, k: int, first_gen_zero: bool = False
) -> list[NormalWord]:
    """All normal words of letter-length ``k`` in lexicographic order."""
    if k < 0:
        raise UsageError(f"length must be nonnegative, got {k}")
    if k == 0:
        return [IDENTITY]
    letters = spec.letters
    limit = spec.m - 1
    out: list[NormalWord] = []

    def extend(prefix: str, last: str, run: int):
        if len(prefix) == k:
            out.append(NormalWord(prefix))
            return
        for c in letters:
            r = run + 1 if c == last else 1
            if r <= limit:
                extend(prefix + c, c, r)

    for c in (letters[:1] if first_gen_zero else letters):
        extend(c, c, 1)
    return out


def count_compositions(k: int, parts: Iterable[int]) -> int:
    """Ordered compositions of ``k`` with summands drawn from ``parts``."""
    parts = sorted(set(parts))
    ways = [1] + [0] * k
    for total in range(1, k + 1):
        ways[total] = sum(ways[total - p] for p in parts if p <= total)
    return ways[k]
