"""Split-merge diagrams: pairs of binary forests with matching leaf counts.

A diagram [E-/E+] is a pair of forests with the same number of leaves, at
least one tree on each side. Leaves of E- are glued to leaves of E+ in order.
Diagrams compose when the feet (trees of E+) of the first match the heads
(trees of E-) of the second; composition refines both middles to a common
forest and cancels. A diagram is reduced when no caret over leaves i, i+1 is
terminal on both sides at once; reduced forms are unique per equivalence
class.

Text form: Forest "/" Forest, e.g. "[(*,*)]/[*,*]".
"""

from __future__ import annotations

from . import trees
from .trees import (
    LEAF,
    ParseError,
    add_caret,
    forest_graft_pieces,
    forest_num_leaves,
    forest_union,
    graft,
    is_caret,
    is_leaf,
    leaf_starts,
    remove_terminal_caret,
    render_forest,
    terminal_pairs,
)


class Diagram:
    """Immutable split-merge diagram with cached canonical text form."""

    __slots__ = ("minus", "plus", "_canon")

    def __init__(self, minus, plus):
        trees.validate_forest(minus)
        trees.validate_forest(plus)
        if forest_num_leaves(minus) != forest_num_leaves(plus):
            raise ValueError(
                "sides must have equal leaf counts: "
                f"{forest_num_leaves(minus)} vs {forest_num_leaves(plus)}")
        object.__setattr__(self, "minus", minus)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    @property
    def heads(self) -> int:
        return len(self.minus)

    @property
    def feet(self) -> int:
        return len(self.plus)

    @property
    def canon(self) -> str:
        c = self._canon
        if c is None:
            c = render_forest(self.minus) + "/" + render_forest(self.plus)
            object.__setattr__(self, "_canon", c)
        return c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.minus == other.minus and self.plus == other.plus

    def __hash__(self) -> int:
        return hash((self.minus, self.plus))

    def __repr__(self) -> str:
        return f"Diagram({self.canon!r})"

    def __str__(self) -> str:
        return self.canon


def parse_diagram(text: str) -> Diagram:
    sc = trees._Scanner(text)
    minus = sc.forest()
    sc.expect("/")
    plus = sc.forest()
    sc.done()
    return Diagram(minus, plus)


def render_diagram(d: Diagram) -> str:
    return d.canon


# ---------------------------------------------------------------------------
# reduction

def reducible_positions(d: Diagram) -> list:
    """Leaf indices whose caret is terminal on both sides, ascending."""
    return sorted(terminal_pairs(d.minus) & terminal_pairs(d.plus))


def cancel_at(d: Diagram, i: int) -> Diagram:
    """Cancel the common terminal caret over leaves i, i+1."""
    return Diagram(remove_terminal_caret(d.minus, i),
                   remove_terminal_caret(d.plus, i))


def reduce(d: Diagram) -> Diagram:
    """Reduced form of d, cancelling the leftmost common caret first.

    The result is independent of cancellation order; the leftmost-first
    strategy just makes the run deterministic.
    """
    while True:
        common = reducible_positions(d)
        if not common:
            return d
        d = cancel_at(d, common[0])


def is_reduced(d: Diagram) -> bool:
    return not (terminal_pairs(d.minus) & terminal_pairs(d.plus))


def expand_at(d: Diagram, i: int) -> Diagram:
    """Unreduced representative: add a caret over leaf i on both sides."""
    return Diagram(add_caret(d.minus, i), add_caret(d.plus, i))


# ---------------------------------------------------------------------------
# groupoid structure

def multiply(d1: Diagram, d2: Diagram) -> Diagram:
    """Compose d1 then d2; d1's feet must match d2's heads.

    Both middles (d1.plus, d2.minus) are refined to their common forest, the
    outer forests are re-expanded by grafting the refinement pieces, and the
    result is reduced.
    """
    if d1.feet != d2.heads:
        raise ValueError(
            f"cannot compose: first has {d1.feet} feet, "
            f"second has {d2.heads} heads")
    common = forest_union(d1.plus, d2.minus)
    minus = graft(d1.minus, forest_graft_pieces(d1.plus, common))
    plus = graft(d2.plus, forest_graft_pieces(d2.minus, common))
    return reduce(Diagram(minus, plus))


def inverse(d: Diagram) -> Diagram:
    return Diagram(d.plus, d.minus)


def identity(n: int) -> Diagram:
    if n < 1:
        raise ValueError("need at least one strand")
    f = (LEAF,) * n
    return Diagram(f, f)


def generator(i: int) -> Diagram:
    """The i-th group generator as a reduced one-head, one-foot diagram.

    generator(0) = [((*,*),*)]/[(*,(*,*))]; generator(i) hangs both trees of
    generator(0) below i extra carets descending to the right.
    """
    if i < 0:
        raise ValueError("generator index must be >= 0")
    minus = ((LEAF, LEAF), LEAF)
    plus = (LEAF, (LEAF, LEAF))
    for _ in range(i):
        minus = (LEAF, minus)
        plus = (LEAF, plus)
    return Diagram((minus,), (plus,))


def is_elementary(f) -> bool:
    """True when every tree of the forest is a leaf or a single caret."""
    return all(is_leaf(t) or (is_leaf(t[0]) and is_leaf(t[1])) for t in f)


def poset_leq(d1: Diagram, d2: Diagram):
    """Witness forest C with d1 * [C / trivial] == d2, or None.

    Exists exactly when q = inverse(d1) * d2 reduces to a diagram whose plus
    side is trivial; the witness is then q's minus side.
    """
    if d1.heads != d2.heads:
        return None
    q = multiply(inverse(d1), d2)
    if all(is_leaf(t) for t in q.plus):
        return q.minus
    return None


# ---------------------------------------------------------------------------
# single split / merge moves on the feet

def split_diagram(n: int, i: int) -> Diagram:
    """Elementary diagram with n heads splitting foot i (1-based) into two."""
    if not 1 <= i <= n:
        raise ValueError(f"foot {i} out of range 1..{n}")
    minus = (LEAF,) * (i - 1) + ((LEAF, LEAF),) + (LEAF,) * (n - i)
    return Diagram(minus, (LEAF,) * (n + 1))


def merge_diagram(n: int, i: int) -> Diagram:
    """Elementary diagram with n heads merging feet i, i+1 (1-based)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"foot pair ({i},{i + 1}) out of range")
    plus = (LEAF,) * (i - 1) + ((LEAF, LEAF),) + (LEAF,) * (n - 1 - i)
    return Diagram((LEAF,) * n, plus)


def split_foot(d: Diagram, i: int) -> Diagram:
    """d composed with a split of foot i, computed surgically.

    Equals multiply(d, split_diagram(d.feet, i)); d must be reduced and the
    result is again reduced (a single split never creates a cancellable
    caret).
    """
    if not 1 <= i <= d.feet:
        raise ValueError(f"foot {i} out of range 1..{d.feet}")
    t = d.plus[i - 1]
    if is_caret(t):
        plus = d.plus[:i - 1] + (t[0], t[1]) + d.plus[i:]
        return Diagram(d.minus, plus)
    j = leaf_starts(d.plus)[i - 1]
    plus = d.plus[:i - 1] + (LEAF, LEAF) + d.plus[i:]
    return Diagram(add_caret(d.minus, j), plus)


def merge_feet(d: Diagram, i: int) -> Diagram:
    """d composed with a merge of feet i, i+1, computed surgically.

    Equals multiply(d, merge_diagram(d.feet, i)); d must be reduced. When
    both feet are single leaves sitting under a terminal caret of the minus
    side, the merge cancels that caret; a single merge never cascades.
    """
    if not 1 <= i <= d.feet - 1:
        raise ValueError(f"foot pair ({i},{i + 1}) out of range")
    t1 = d.plus[i - 1]
    t2 = d.plus[i]
    if is_leaf(t1) and is_leaf(t2):
        j = leaf_starts(d.plus)[i - 1]
        if j in terminal_pairs(d.minus):
            minus = remove_terminal_caret(d.minus, j)
            plus = d.plus[:i - 1] + (LEAF,) + d.plus[i + 1:]
            return Diagram(minus, plus)
    plus = d.plus[:i - 1] + ((t1, t2),) + d.plus[i + 1:]
    return Diagram(d.minus, plus)


def apply_move(d: Diagram, move) -> Diagram:
    """Apply ("s", i) as split_foot or ("m", i) as merge_feet."""
    kind, i = move
    if kind == "s":
        return split_foot(d, i)
    if kind == "m":
        return merge_feet(d, i)
    raise ValueError(f"unknown move kind {kind!r}")


def invert_move(move):
    kind, i = move
    return ("m" if kind == "s" else "s", i)


def mirror_diagram(d: Diagram) -> Diagram:
    """Left-right reflection; an automorphism of the calculus."""
    return Diagram(trees.mirror_forest(d.minus), trees.mirror_forest(d.plus))


# ---------------------------------------------------------------------------
# randomized constructions

def random_diagram(rng, heads: int, feet: int, extra_carets: int) -> Diagram:
    """Random (not necessarily reduced) diagram with the given shape."""
    leaves = max(heads, feet) + extra_carets
    minus = trees.random_forest_with_leaves(rng, heads, leaves)
    plus = trees.random_forest_with_leaves(rng, feet, leaves)
    return Diagram(minus, plus)


def random_group_element(rng, extra_carets: int) -> Diagram:
    return reduce(random_diagram(rng, 1, 1, max(1, extra_carets)))


def random_vertex(rng, feet: int, extra_carets: int) -> Diagram:
    """Random reduced one-head diagram with exactly the given feet count.

    Reduction cancels carets inside trees, never whole trees, so the foot
    count survives.
    """
    return reduce(random_diagram(rng, 1, feet, extra_carets))


def random_expansion(rng, d: Diagram, k: int) -> Diagram:
    """Unreduced representative of d obtained by k common caret insertions."""
    for _ in range(k):
        d = expand_at(d, rng.randrange(forest_num_leaves(d.minus)))
    return d
