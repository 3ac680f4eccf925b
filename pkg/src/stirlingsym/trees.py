"""Normalized leaf-labeled binary trees and their colored families.

A tree is either a leaf, stored as a bare int label, or an internal node,
stored as a pair ``(left, right)``.  A tree on [n] is *normalized* when the
smallest label of every subtree sits in its leftmost leaf; equivalently the
valency (minimum label) of each internal node equals the valency of its left
child.  There are (2n-3)!! normalized trees on [n] for n >= 2.

An internal node x is a *chain node* (historically: Lyndon node) when its
left child is a leaf, or when the valency of the right child of its left
child exceeds the valency of its own right child.  Two block partitions of
the internal nodes drive everything here:

* the *Lyn* partition glues every non-chain node to its left child;
* the *Comb* partition glues every node to its right child when that child
  is internal.

Their block-size partitions are the two tree types.  Colorings of internal
nodes subject to ``color(left) > color(node)`` at non-chain nodes (Lyn kind)
or ``color(node) > color(right)`` at nodes with internal right child (Comb
kind) give the colored families; content counts how many nodes carry each
color.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import Partition, WeakComposition, sort_to_partition, trim
from .series import SymFuncRing, TruncatedSeries
from .symfunc import SymFunc

Tree = object  # int leaf or (Tree, Tree) pair

KINDS = ("lyn", "comb")


def is_leaf(t) -> bool:
    return isinstance(t, int)


def leaves(t) -> list[int]:
    if is_leaf(t):
        return [t]
    return leaves(t[0]) + leaves(t[1])


def valency(t) -> int:
    """Smallest leaf label of the subtree."""
    return t if is_leaf(t) else min(valency(t[0]), valency(t[1]))


def is_normalized(t) -> bool:
    if is_leaf(t):
        return True
    return (
        valency(t[0]) == valency(t)
        and is_normalized(t[0])
        and is_normalized(t[1])
    )


def _tree_sort_key(t):
    # leaf word first, then shape read in preorder (leaves sort before nodes)
    shape = []

    def visit(node):
        if is_leaf(node):
            shape.append(0)
        else:
            shape.append(1)
            visit(node[0])
            visit(node[1])

    visit(t)
    return (leaves(t), shape)


def enumerate_normalized(n: int) -> list[Tree]:
    """All normalized trees on [n]; (2n-3)!! of them for n >= 2.

    Built by attaching each new largest leaf m as the right sibling of every
    node of every tree on [m-1]; since m is the largest label the result
    stays normalized, and each tree arises exactly once.  Output order is
    canonical: by the left-to-right leaf word, then by shape.
    """
    if n < 1:
        raise ValueError("n must be positive")
    trees: list[Tree] = [1]
    for m in range(2, n + 1):
        trees = [grown for t in trees for grown in _attach(t, m)]
    trees.sort(key=_tree_sort_key)
    return trees


def _attach(t, m: int):
    yield (t, m)
    if not is_leaf(t):
        for left in _attach(t[0], m):
            yield (left, t[1])
        for right in _attach(t[1], m):
            yield (t[0], right)


@dataclass
class _NodeInfo:
    index: int
    left_index: int | None
    right_index: int | None
    chain_node: bool


def analyze(t) -> list[_NodeInfo]:
    """Preorder records for the internal nodes of a normalized tree."""
    info: list[_NodeInfo] = []

    def visit(node) -> tuple[int | None, int]:
        # returns (internal index or None, valency)
        if is_leaf(node):
            return None, node
        index = len(info)
        info.append(None)  # placeholder, filled after children are known
        left, right = node
        left_index, vleft = visit(left)
        right_index, vright = visit(right)
        if left_index is None:
            chain = True
        else:
            v_rl = valency(left[1])
            chain = v_rl > vright
        info[index] = _NodeInfo(index, left_index, right_index, chain)
        return index, min(vleft, vright)

    visit(t)
    return info


def is_lyndon_node(node) -> bool:
    """Chain-node predicate for an internal node given as a subtree.

    A node whose left child is a leaf qualifies by convention (the defining
    inequality has nothing to compare).
    """
    if is_leaf(node):
        raise ValueError("leaves are not internal nodes")
    left, right = node
    if is_leaf(left):
        return True
    return valency(left[1]) > valency(right)


def is_lyndon_tree(t) -> bool:
    return is_normalized(t) and all(rec.chain_node for rec in analyze(t))


def _blocks(size: int, unions) -> list[int]:
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    sizes: dict[int, int] = {}
    for x in range(size):
        root = find(x)
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values(), reverse=True)


def lyndon_type(t) -> Partition:
    """Block sizes after gluing each non-chain node to its left child."""
    if not is_normalized(t):
        raise ValueError("tree is not normalized")
    info = analyze(t)
    unions = [
        (rec.index, rec.left_index) for rec in info if not rec.chain_node
    ]
    return tuple(_blocks(len(info), unions))


def comb_type(t) -> Partition:
    """Block sizes after gluing each node to its internal right child."""
    if not is_normalized(t):
        raise ValueError("tree is not normalized")
    info = analyze(t)
    unions = [
        (rec.index, rec.right_index)
        for rec in info
        if rec.right_index is not None
    ]
    return tuple(_blocks(len(info), unions))


def tree_type(t, kind: str) -> Partition:
    if kind == "lyn":
        return lyndon_type(t)
    if kind == "comb":
        return comb_type(t)
    raise ValueError(f"kind must be one of {KINDS}")


# ---------------------------------------------------------------------------
# colored trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoredTree:
    """A normalized tree plus one color per internal node, in preorder."""

    tree: Tree
    colors: tuple[int, ...]

    def content(self) -> WeakComposition:
        counts: dict[int, int] = {}
        for c in self.colors:
            counts[c] = counts.get(c, 0) + 1
        width = max(counts, default=0)
        return trim(tuple(counts.get(i, 0) for i in range(1, width + 1)))


def _coloring_constraints(info, kind: str) -> list[tuple[int, int]]:
    """Pairs (a, b) of preorder node indices requiring color(b) > color(a)."""
    if kind == "lyn":
        # color(left child) > color(node) at every non-chain node
        return [
            (rec.index, rec.left_index) for rec in info if not rec.chain_node
        ]
    if kind == "comb":
        # color(node) > color(right child) at nodes with internal right child
        return [
            (rec.right_index, rec.index)
            for rec in info
            if rec.right_index is not None
        ]
    raise ValueError(f"kind must be one of {KINDS}")


def _colorings(info, kind: str, palette: dict[int, int]):
    """DFS over preorder color assignments honoring the kind's constraints.

    palette maps color -> available multiplicity.  Constraints always compare
    a node against an ancestor-side node that appears earlier in preorder, so
    they can be checked as soon as each node is colored.
    """
    need_gt: dict[int, int] = {}  # node -> node it must exceed
    need_lt: dict[int, int] = {}
    for low, high in _coloring_constraints(info, kind):
        if low < high:
            need_gt[high] = low
        else:
            need_lt[low] = high
    size = len(info)
    colors = [0] * size
    remaining = dict(palette)

    def walk(i: int):
        if i == size:
            yield tuple(colors)
            return
        for c in list(remaining):
            if remaining[c] == 0:
                continue
            if i in need_gt and not c > colors[need_gt[i]]:
                continue
            if i in need_lt and not c < colors[need_lt[i]]:
                continue
            colors[i] = c
            remaining[c] -= 1
            yield from walk(i + 1)
            remaining[c] += 1

    yield from walk(0)


def enumerate_colored(kind: str, mu) -> list[ColoredTree]:
    """All colored trees of the given kind with content exactly mu."""
    mu = trim(mu)
    n = sum(mu) + 1
    palette = {i + 1: m for i, m in enumerate(mu) if m > 0}
    out = []
    for t in enumerate_normalized(n):
        info = analyze(t)
        for colors in _colorings(info, kind, palette):
            out.append(ColoredTree(t, colors))
    return out


def type_generating_function(kind: str, n: int) -> SymFunc:
    """Sum of e_(tree type) over all normalized trees on [n]."""
    tally: dict[Partition, int] = {}
    for t in enumerate_normalized(n):
        lam = tree_type(t, kind)
        tally[lam] = tally.get(lam, 0) + 1
    return SymFunc("e", {lam: Fraction(c) for lam, c in tally.items()})


def colored_generating_function(kind: str, n: int) -> SymFunc:
    """Content generating function of the kind's colored trees on [n].

    Colors are restricted to 1..n-1, which is faithful: a content vector has
    at most n-1 nonzero entries, so every monomial-basis coefficient of the
    (symmetric) result is already visible.  Returned in the monomial basis;
    must agree with :func:`type_generating_function`.
    """
    if n == 1:
        return SymFunc.one("m")
    width = n - 1
    tally: dict[WeakComposition, int] = {}
    for t in enumerate_normalized(n):
        info = analyze(t)
        _tally_colorings(info, kind, width, tally)
    return SymFunc("m", _content_to_monomial(tally, width))


def _tally_colorings(info, kind: str, width: int, tally: dict) -> None:
    """Count valid colorings with colors 1..width by content, in place.

    Unrolled version of :func:`_colorings` for the unrestricted palette; the
    constraint against the (already colored) earlier node is checked as each
    node is assigned, so invalid branches are pruned immediately.
    """
    need_gt = [-1] * len(info)
    need_lt = [-1] * len(info)
    for low, high in _coloring_constraints(info, kind):
        if low < high:
            need_gt[high] = low
        else:
            need_lt[low] = high
    size = len(info)
    colors = [0] * size
    counts = [0] * (width + 1)

    def walk(i: int):
        if i == size:
            mu = trim(counts[1:])
            tally[mu] = tally.get(mu, 0) + 1
            return
        lo, hi = 1, width
        if need_gt[i] >= 0:
            lo = colors[need_gt[i]] + 1
        if need_lt[i] >= 0:
            hi = colors[need_lt[i]] - 1
        for c in range(lo, hi + 1):
            colors[i] = c
            counts[c] += 1
            walk(i + 1)
            counts[c] -= 1

    walk(0)


def _content_to_monomial(tally: dict, width: int) -> dict:
    """Coefficient of m_lam = tally at the sorted content, symmetry asserted."""
    by_shape: dict[Partition, list[int]] = {}
    for mu, count in tally.items():
        by_shape.setdefault(sort_to_partition(mu), []).append(count)
    out: dict[Partition, Fraction] = {}
    for lam, counts in by_shape.items():
        orbit = _rearrangement_count(lam, width)
        if len(counts) != orbit or len(set(counts)) != 1:
            raise AssertionError(f"content tally is not symmetric at {lam}")
        out[lam] = Fraction(counts[0])
    return out


def _rearrangement_count(lam: Partition, width: int) -> int:
    """Number of distinct rearrangements of lam within `width` positions."""
    mult: dict[int, int] = {0: width - len(lam)}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    out = factorial(width)
    for m in mult.values():
        out //= factorial(m)
    return out


# ---------------------------------------------------------------------------
# forbidden chain trees
# ---------------------------------------------------------------------------


def forbidden_trees(kind: str, n: int) -> list[ColoredTree]:
    """The chain-shaped trees on [n] outside the colored family.

    For the Lyn kind these are increasing left chains ((1,2),3),...  with
    colors weakly increasing toward the root; for the Comb kind decreasing
    right chains (1,(2,...,(n-1,n))) with colors weakly increasing away from
    the root.  Either way one tree per multiset of n-1 colors; colors are
    truncated to 1..max(1, n-1) which captures every partition content.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [ColoredTree(1, ())]
    if kind == "lyn":
        shape: Tree = (1, 2)
        for m in range(3, n + 1):
            shape = (shape, m)
    else:
        shape = (n - 1, n)
        for m in range(n - 2, 0, -1):
            shape = (m, shape)
    out = []
    palette = list(range(1, n))
    for mult in _weak_monotone(len(palette), n - 1):
        # mult[i] copies of color i+1, listed from the deepest node upward
        seq: list[int] = []
        for i, m in enumerate(mult):
            seq.extend([palette[i]] * m)
        if kind == "lyn":
            # preorder = root first; colors weakly increase toward the root
            colors = tuple(reversed(seq))
        else:
            # preorder = root first; root carries the smallest color
            colors = tuple(seq)
        out.append(ColoredTree(shape, colors))
    return out


def _weak_monotone(colors: int, length: int):
    """Multiplicity vectors of weakly increasing color sequences."""

    def gen(rest: int, slots: int):
        if slots == 1:
            yield (rest,)
            return
        for first in range(rest + 1):
            for tail in gen(rest - first, slots - 1):
                yield (first,) + tail

    yield from gen(length, colors)


def forbidden_tree_egf(kind: str, order: int) -> TruncatedSeries:
    """Signed EGF of the forbidden chain trees, assembled by enumeration.

    The coefficient of y^n/n! is (-1)^(n-1) times the content generating
    function of the chains on [n]; it must equal the alternating complete
    homogeneous series sum (-1)^(n-1) h_(n-1) y^n / n!.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    ring = SymFuncRing(basis="m")
    coeffs = [SymFunc.zero("m")]
    for n in range(1, order + 1):
        tally: dict[WeakComposition, int] = {}
        for ct in forbidden_trees(kind, n):
            mu = ct.content()
            tally[mu] = tally.get(mu, 0) + 1
        terms = _content_to_monomial(tally, max(1, n - 1))
        sign = (-1) ** (n - 1)
        coeffs.append(SymFunc("m", {k: sign * c for k, c in terms.items()}))
    return TruncatedSeries.from_egf_coefficients(ring, order, coeffs)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def tree_to_json(t, colors: dict | None = None):
    """Nested JSON form {"leaf": 3} / {"node": {"left":..,"right":..,"color":c}}."""
    counter = [0]

    def build(node):
        if is_leaf(node):
            return {"leaf": node}
        index = counter[0]
        counter[0] += 1
        data = {"left": build(node[0]), "right": build(node[1])}
        if colors is not None and index in colors:
            data["color"] = colors[index]
        return {"node": data}

    return build(t)


def colored_tree_to_json(ct: ColoredTree):
    return tree_to_json(ct.tree, dict(enumerate(ct.colors)))


def tree_from_json(data) -> Tree:
    if "leaf" in data:
        return int(data["leaf"])
    node = data["node"]
    return (tree_from_json(node["left"]), tree_from_json(node["right"]))


def render_tree(t, indent: int = 0) -> str:
    """Indented ASCII rendering, right subtree above left."""
    pad = "  " * indent
    if is_leaf(t):
        return f"{pad}{t}"
    return "\n".join(
        [f"{pad}*", render_tree(t[1], indent + 1), render_tree(t[0], indent + 1)]
    )
