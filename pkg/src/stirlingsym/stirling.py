"""Multiset permutations with the nesting property, their statistics and types.

A word over [n] in which every letter occurs exactly r times is *nested* when
every letter other than m that lies between two occurrences of m exceeds m.
For r = 1 these are ordinary permutations; r = 2 is the classical case.  The
family is denoted Q(n, r) here and is enumerated by inserting the block
k...k (r copies) of each new largest letter into every gap, giving
prod_{k=1}^{n} ((k-1)r + 1) words.

Statistics use the boundary convention that a zero sentinel sits on both ends
of the word, so the final position always counts as a descent and position 0
as an ascent (for nonempty words).

The four type partitions are built from the block structure: the block B(a)
of a letter a is the segment spanning all its occurrences.  Ascending
adjacent chains link a < b when B(b) starts right after B(a) ends;
j-terminally nested chains link a to the letter whose block is the final
block inside the j-th gap of B(a).  The reversal map converts these to the
descending adjacent and j-initially nested variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, sort_to_partition
from .symfunc import SymFunc, TPoly

TYPE_KINDS = ("AA", "DA", "TN", "IN")


@dataclass(frozen=True)
class StirlingPerm:
    """A nested multiset permutation: each of 1..n occurs exactly r times."""

    word: tuple[int, ...]
    n: int
    r: int

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise ValueError("need n >= 0 and r >= 1")
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if len(word) != self.n * self.r:
            raise ValueError(f"word length {len(word)} != n*r = {self.n * self.r}")
        counts = [0] * (self.n + 1)
        for x in word:
            if not 1 <= x <= self.n:
                raise ValueError(f"letter {x} out of range 1..{self.n}")
            counts[x] += 1
        if any(c != self.r for c in counts[1:]):
            raise ValueError("every letter must occur exactly r times")
        # nesting: other letters between two occurrences of m exceed m;
        # open letters form an increasing stack while scanning
        stack: list[int] = []
        remaining = [self.r] * (self.n + 1)
        for x in word:
            if stack and x < stack[-1]:
                raise ValueError(f"nesting condition violated in {word}")
            remaining[x] -= 1
            if stack and stack[-1] == x:
                if remaining[x] == 0:
                    stack.pop()
            elif remaining[x] > 0:
                stack.append(x)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return " ".join(str(x) for x in self.word)

    def to_json(self):
        return list(self.word)


@lru_cache(maxsize=32)
def _all_stirling(n: int, r: int) -> tuple[StirlingPerm, ...]:
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    words = [()]
    for k in range(1, n + 1):
        block = (k,) * r
        words = [
            w[:i] + block + w[i:] for w in words for i in range(len(w) + 1)
        ]
    words.sort()
    return tuple(StirlingPerm(w, n, r) for w in words)


def enumerate_stirling(n: int, r: int) -> list[StirlingPerm]:
    """All of Q(n, r) by iterated block insertion, sorted lexicographically."""
    return list(_all_stirling(n, r))


def enumerate_stirling_backtrack(n: int, r: int) -> list[tuple[int, ...]]:
    """Independent enumeration of Q(n, r) word tuples by pruned backtracking.

    Builds words left to right keeping the stack of letters whose occurrences
    are still open; a letter may only be placed if it is at least the
    innermost open letter.  Used as a cross-validation oracle for the
    insertion route.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    out: list[tuple[int, ...]] = []
    remaining = [r] * (n + 1)

    def walk(prefix: list[int], stack: list[int]):
        if len(prefix) == n * r:
            out.append(tuple(prefix))
            return
        floor = stack[-1] if stack else 1
        for x in range(floor, n + 1):
            if remaining[x] == 0:
                continue
            remaining[x] -= 1
            pushed = popped = False
            if stack and stack[-1] == x:
                if remaining[x] == 0:
                    stack.pop()
                    popped = True
            elif remaining[x] > 0:
                stack.append(x)
                pushed = True
            prefix.append(x)
            walk(prefix, stack)
            prefix.pop()
            if popped:
                stack.append(x)
            if pushed:
                stack.pop()
            remaining[x] += 1

    walk([], [])
    out.sort()
    return out


def reverse(sp: StirlingPerm) -> StirlingPerm:
    """The reversed word; reversal preserves the nesting condition."""
    return StirlingPerm(tuple(reversed(sp.word)), sp.n, sp.r)


def stats(sp: StirlingPerm) -> dict:
    """Descents, ascents and per-gap plateau counts, with zero sentinels.

    Returns {"des": int, "asc": int, "pla": (pla_1, ..., pla_{r-1})}.  A
    plateau between equal adjacent letters belongs to gap j when the left
    letter is the j-th occurrence of its value.
    """
    word = sp.word
    padded = (0,) + word + (0,)
    des = asc = 0
    pla = [0] * (sp.r - 1) if sp.r > 1 else []
    seen = [0] * (sp.n + 1)
    for i in range(len(padded) - 1):
        a, b = padded[i], padded[i + 1]
        if 1 <= i <= len(word):
            seen[word[i - 1]] += 1
        if a > b:
            des += 1
        elif a < b:
            asc += 1
        elif a != 0:
            pla[seen[a] - 1] += 1
    return {"des": des, "asc": asc, "pla": tuple(pla)}


def _occurrences(sp: StirlingPerm) -> dict[int, list[int]]:
    occ: dict[int, list[int]] = {a: [] for a in range(1, sp.n + 1)}
    for i, x in enumerate(sp.word):
        occ[x].append(i)
    return occ


def block(sp: StirlingPerm, a: int) -> tuple[int, int]:
    """Index range [start, end] of the block of letter a (inclusive)."""
    if not 1 <= a <= sp.n:
        raise ValueError(f"letter {a} out of range 1..{sp.n}")
    occ = _occurrences(sp)[a]
    return occ[0], occ[-1]


def ring_segments(sp: StirlingPerm, a: int) -> list[tuple[int, ...]]:
    """The r-1 (possibly empty) subwords between consecutive occurrences of a."""
    if not 1 <= a <= sp.n:
        raise ValueError(f"letter {a} out of range 1..{sp.n}")
    occ = _occurrences(sp)[a]
    return [tuple(sp.word[occ[j] + 1 : occ[j + 1]]) for j in range(sp.r - 1)]


def _chain_type(succ: dict[int, int], n: int) -> Partition:
    """Partition of n from the chain decomposition of a successor map."""
    has_pred = set(succ.values())
    parts = []
    for start in range(1, n + 1):
        if start in has_pred:
            continue
        length = 1
        x = start
        while x in succ:
            x = succ[x]
            length += 1
        parts.append(length)
    return sort_to_partition(parts)


def ascending_adjacent_type(sp: StirlingPerm) -> Partition:
    """Chain a -> b whenever a < b and B(b) starts right after B(a) ends."""
    if sp.n == 0:
        return ()
    occ = _occurrences(sp)
    first = {a: pos[0] for a, pos in occ.items()}
    last = {a: pos[-1] for a, pos in occ.items()}
    starts = {pos: a for a, pos in first.items()}
    succ = {}
    for a in range(1, sp.n + 1):
        b = starts.get(last[a] + 1)
        if b is not None and a < b:
            succ[a] = b
    return _chain_type(succ, sp.n)


def terminally_nested_type(sp: StirlingPerm, j: int) -> Partition:
    """Chain a -> last letter of the j-th gap segment of B(a), when nonempty."""
    if not 1 <= j <= sp.r - 1:
        raise ValueError(f"j must be in 1..{sp.r - 1}")
    if sp.n == 0:
        return ()
    occ = _occurrences(sp)
    succ = {}
    for a in range(1, sp.n + 1):
        pos = occ[a]
        if pos[j] - pos[j - 1] > 1:
            succ[a] = sp.word[pos[j] - 1]
    return _chain_type(succ, sp.n)


def descending_adjacent_type(sp: StirlingPerm) -> Partition:
    return ascending_adjacent_type(reverse(sp))


def initially_nested_type(sp: StirlingPerm, j: int) -> Partition:
    """Chain a -> first letter of the j-th gap segment of B(a), when nonempty.

    Equivalently the terminally nested type of the reversed word; reversal
    turns gap j into gap r-j, so the index flips to keep the chain count
    refining the j-th plateau statistic of the original word.
    """
    if not 1 <= j <= sp.r - 1:
        raise ValueError(f"j must be in 1..{sp.r - 1}")
    return terminally_nested_type(reverse(sp), sp.r - j)


def type_of(sp: StirlingPerm, kind: str = "AA", j: int = 1) -> Partition:
    """Dispatch to one of the four type statistics."""
    if kind == "AA":
        return ascending_adjacent_type(sp)
    if kind == "DA":
        return descending_adjacent_type(sp)
    if kind == "TN":
        return terminally_nested_type(sp, j)
    if kind == "IN":
        return initially_nested_type(sp, j)
    raise ValueError(f"unknown type kind {kind!r}")


def _validate_kind(kind: str, j: int, r: int) -> None:
    if kind not in TYPE_KINDS:
        raise ValueError(f"unknown type kind {kind!r}")
    if kind in ("TN", "IN") and not 1 <= j <= r - 1:
        raise ValueError(f"kind {kind} needs 1 <= j <= r-1 = {r - 1}")


@lru_cache(maxsize=None)
def _type_tally(n: int, r: int, kind: str, j: int) -> tuple:
    tally: dict[Partition, int] = {}
    for sp in _all_stirling(n, r):
        lam = type_of(sp, kind, j)
        tally[lam] = tally.get(lam, 0) + 1
    return tuple(sorted(tally.items()))


def stirling_symfunc(n: int, r: int, kind: str = "AA", j: int = 1) -> SymFunc:
    """Sum of e_(type) over all of Q(n, r), in the elementary basis.

    The choice of type statistic does not change the result (the four types
    are equidistributed); tests assert this rather than the function.
    """
    _validate_kind(kind, j, r)
    return SymFunc("e", {lam: Fraction(c) for lam, c in _type_tally(n, r, kind, j)})


@lru_cache(maxsize=None)
def _descent_tally(n: int, r: int) -> tuple:
    tally: dict[int, int] = {}
    for sp in _all_stirling(n, r):
        d = stats(sp)["des"]
        tally[d] = tally.get(d, 0) + 1
    return tuple(sorted(tally.items()))


def eulerian_polynomial(n: int, r: int) -> TPoly:
    """Descent generating polynomial over Q(n, r), sentinels included."""
    return TPoly({d: Fraction(c) for d, c in _descent_tally(n, r)})


def eulerian_brute_force(n: int, r: int) -> TPoly:
    """Descent tally over the backtracking enumeration; independent oracle."""
    tally: dict[int, int] = {}
    for word in enumerate_stirling_backtrack(n, r):
        padded = (0,) + word + (0,)
        d = sum(1 for i in range(len(padded) - 1) if padded[i] > padded[i + 1])
        tally[d] = tally.get(d, 0) + 1
    return TPoly({d: Fraction(c) for d, c in tally.items()})
