"""Cubeless words, morphic words and the tree of cubeless words.

A word over ``{a, b}`` is cubeless when no letter repeats ``m`` (default 3)
times in a row; these are the normal forms of Z/3 * Z/3.  The tree has the
empty word as root and the cubeless words starting with ``a`` as vertices,
with an edge from ``w`` to ``wx`` for each letter ``x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ResourceError, UsageError

ROOT_LABEL = "Λ"
HIGHLIGHT_COLORS = ("purple", "red", "blue", "darkgreen", "orange", "brown")
DEFAULT_TREE_CAP = 5 * 10**6


@dataclass(frozen=True)
class Morphism:
    """Monoid morphism given by the images of single letters."""

    alphabet: str
    images: Mapping[str, str]

    def __post_init__(self):
        for letter in self.alphabet:
            image = self.images.get(letter)
            if not image:
                raise UsageError(f"letter {letter!r} needs a nonempty image")
            stray = set(image) - set(self.alphabet)
            if stray:
                raise UsageError(f"image of {letter!r} uses letters {sorted(stray)} outside the alphabet")
        extra = set(self.images) - set(self.alphabet)
        if extra:
            raise UsageError(f"images given for letters outside the alphabet: {sorted(extra)}")

    def __call__(self, word: str) -> str:
        return apply_morphism(self, word)


FIBONACCI = Morphism("ab", {"a": "ab", "b": "a"})
THUE_MORSE = Morphism("ab", {"a": "ab", "b": "ba"})
NAMED_MORPHISMS = {"fibonacci": FIBONACCI, "thue-morse": THUE_MORSE}


def apply_morphism(f: Morphism, word: str) -> str:
    try:
        return "".join(f.images[c] for c in word)
    except KeyError as exc:
        raise UsageError(f"letter {exc.args[0]!r} is not in the alphabet {f.alphabet!r}") from None


def fixed_point_prefix(f: Morphism, seed: str, length: int) -> str:
    """Length-``length`` prefix of the fixed point ``f^inf(seed)``.

    ``f(seed)`` must start with ``seed`` and be longer than one letter.
    """
    if seed not in f.images:
        raise UsageError(f"seed {seed!r} is not in the alphabet")
    image = f.images[seed]
    if not image.startswith(seed) or len(image) < 2:
        raise UsageError(f"morphism is not prolongable on {seed!r}")
    if length < 0:
        raise UsageError("length must be nonnegative")
    word = seed
    while len(word) < length:
        word = apply_morphism(f, word)
    return word[:length]


def is_cubeless(word: str, m: int = 3) -> bool:
    """True iff no letter occurs ``m`` or more times consecutively."""
    run = 0
    prev = None
    for c in word:
        run = run + 1 if c == prev else 1
        if run >= m:
            return False
        prev = c
    return True


def _tail_run(word: str) -> int:
    if not word:
        return 0
    return len(word) - len(word.rstrip(word[-1]))


def children(word: str, m: int = 3) -> list[str]:
    """Children of a vertex in lexicographic order.  The root's only child is ``a``."""
    if not word:
        return ["a"]
    tail = _tail_run(word)
    out = []
    for x in "ab":
        if x != word[-1] or tail + 1 < m:
            out.append(word + x)
    return out


@dataclass
class CubelessTree:
    """Levels ``0 .. depth`` of the cubeless-word tree, each sorted."""

    levels: list[list[str]]
    m: int = 3
    _index: set = field(default_factory=set, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {w for level in self.levels for w in level}

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def __contains__(self, word):
        return word in self._index

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def children(self, word: str) -> list[str]:
        if len(word) >= self.depth:
            return []
        return children(word, self.m)

    def edges(self) -> list[tuple[str, str]]:
        return [(w[:-1], w) for level in self.levels[1:] for w in level]


def build_tree(depth: int, m: int = 3, cap: int = DEFAULT_TREE_CAP) -> CubelessTree:
    if depth < 0:
        raise UsageError(f"depth must be nonnegative, got {depth}")
    levels = [[""]]
    total = 1
    for k in range(1, depth + 1):
        level = [c for w in levels[-1] for c in children(w, m)]
        total += len(level)
        if total > cap:
            raise ResourceError(f"tree exceeds {cap} vertices at level {k}", partial=levels)
        levels.append(level)
    return CubelessTree(levels, m)


def check_level_sorted(tree: CubelessTree, k: int) -> bool:
    """True iff level ``k`` is strictly increasing in lexicographic order."""
    if not 0 <= k <= tree.depth:
        raise UsageError(f"level {k} outside 0..{tree.depth}")
    level = tree.levels[k]
    return all(u < v for u, v in zip(level, level[1:]))


def _node_id(word: str) -> str:
    return json.dumps(word or ROOT_LABEL, ensure_ascii=False)


def highlight_path(tree: CubelessTree, prefix: str) -> list[tuple[str, str]]:
    """Edges of the root path spelled by ``prefix`` truncated to the tree depth."""
    prefix = prefix[: tree.depth]
    for i in range(1, len(prefix) + 1):
        if prefix[:i] not in tree:
            raise UsageError(f"prefix {prefix[:i]!r} is not a vertex of the tree")
    return [(prefix[: i - 1], prefix[:i]) for i in range(1, len(prefix) + 1)]


def export_dot(tree: CubelessTree, highlights: Sequence[tuple[str, str]] = ()) -> str:
    """Graphviz digraph of the tree.

    Each highlight is ``(name, word)``; its path gets its own color (purple,
    red, then a fixed palette).  An edge on several paths gets a color list
    such as ``"purple:red"``.
    """
    colored: dict[tuple[str, str], list[str]] = {}
    legend = []
    for i, (name, prefix) in enumerate(highlights):
        color = HIGHLIGHT_COLORS[i % len(HIGHLIGHT_COLORS)]
        legend.append((name, color))
        for edge in highlight_path(tree, prefix):
            colored.setdefault(edge, []).append(color)

    lines = ["digraph cubeless {", "  rankdir=LR;", "  node [shape=plaintext];"]
    for name, color in legend:
        lines.append(f"  // highlight {name}: {color}")
    for level in tree.levels:
        for w in level:
            lines.append(f"  {_node_id(w)} [label={_node_id(w)}];")
    for u, v in tree.edges():
        attrs = ""
        if (u, v) in colored:
            colors = ":".join(colored[(u, v)])
            attrs = f' [color="{colors}", penwidth=2]'
        lines.append(f"  {_node_id(u)} -> {_node_id(v)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(tree: CubelessTree) -> str:
    """Tree as a JSON list of ``{level, word, parent}`` records (root parent is null)."""
    records = [
        {"level": k, "word": w, "parent": (w[:-1] if k else None)}
        for k, level in enumerate(tree.levels)
        for w in level
    ]
    return json.dumps(records, ensure_ascii=False, indent=1) + "\n"


def subtree_level_counts(v: str, depth: int, m: int = 3) -> list[int]:
    """Number of descendants of ``v`` at relative depth ``0 .. depth``.

    Only the run length at the end of ``v`` matters, so the counts follow a
    transfer over run lengths rather than an explicit walk.
    """
    if v and (v[0] != "a" or not is_cubeless(v, m)):
        raise UsageError(f"{v!r} is not a vertex of the tree")
    if depth < 0:
        raise UsageError("depth must be nonnegative")
    if not v:
        return [1] + subtree_level_counts("a", depth - 1, m) if depth else [1]
    # by_run[r]: descendants whose last run has length r
    by_run = [0] * m
    by_run[_tail_run(v)] = 1
    counts = [1]
    for _ in range(depth):
        nxt = [0] * m
        for r, c in enumerate(by_run):
            if c:
                nxt[1] += c
                if r + 1 < m:
                    nxt[r + 1] += c
        by_run = nxt
        counts.append(sum(by_run))
    return counts


def subtree_level_counts_bruteforce(v: str, depth: int, m: int = 3) -> list[int]:
    counts = [1]
    level = [v]
    for _ in range(depth):
        level = [c for w in level for c in children(w, m)]
        counts.append(len(level))
    return counts


def cubeless_words(length: int, m: int = 3, first: str = "a") -> list[str]:
    """All cubeless words of the given length starting with ``first``, sorted."""
    if length == 0:
        return [""]
    level = [first]
    for _ in range(length - 1):
        level = [c for w in level for c in children(w, m)]
    return level


@dataclass(frozen=True)
class ThetaSequence:
    """Prefixes ``Psi, Psi a, Psi aa, Psi aab, ...`` of the word ``Psi (aab)^inf``."""

    psi: str

    def __post_init__(self):
        psi = self.psi
        if not psi or set(psi) - {"a", "b"}:
            raise UsageError(f"psi must be a nonempty word over {{a, b}}, got {psi!r}")
        if psi[0] != "a":
            raise UsageError(f"psi must start with 'a', got {psi!r}")
        if psi[-1] == "a":
            raise UsageError(f"psi must not end with 'a', got {psi!r}")
        if not is_cubeless(psi):
            raise UsageError(f"psi must be cubeless, got {psi!r}")

    def theta(self, k: int) -> str:
        if k < 0:
            raise UsageError("k must be nonnegative")
        reps = k // 3 + 1
        return (self.psi + "aab" * reps)[: len(self.psi) + k]

    def thetas(self, K: int) -> list[str]:
        return [self.theta(k) for k in range(K + 1)]


def q_set(psi: str, k: int) -> list[str]:
    """Cubeless words of length ``|Theta_k|`` starting with ``a`` that are ``>= Theta_k``.

    Found by enumerating every such word and comparing.
    """
    theta = ThetaSequence(psi).theta(k)
    return [w for w in cubeless_words(len(theta)) if w >= theta]


def q_count(psi: str, k: int) -> int:
    return len(q_set(psi, k))


def q_count_by_subtrees(psi: str, k: int) -> int:
    """Same count as :func:`q_count`, summed over the subtrees branching right of the path.

    At each position where ``Theta_k`` has an ``a`` and replacing it by ``b``
    stays cubeless, every descendant of that sibling at the target level is
    larger than ``Theta_k``.
    """
    theta = ThetaSequence(psi).theta(k)
    L = len(theta)
    total = 1
    for i in range(1, L):
        if theta[i] == "a":
            sibling = theta[:i] + "b"
            if is_cubeless(sibling):
                total += subtree_level_counts(sibling, L - i - 1)[-1]
    return total


def check_q_recurrence(values: Iterable[int]) -> list[int]:
    """Indices ``k >= 2`` where ``Q_k != Q_{k-1} + Q_{k-2}``."""
    q = list(values)
    return [k for k in range(2, len(q)) if q[k] != q[k - 1] + q[k - 2]]
