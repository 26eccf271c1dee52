"""Combinatorial quivers of minuscule Schubert varieties.

Fix a reduced word (b_1, ..., b_N) for the longest coset representative of
W/W_P, P a minuscule maximal parabolic.  The quiver has one vertex per
letter position.  Writing s(i) for the next and p(i) for the previous
position carrying the same simple root as i, there is an arrow i -> j
whenever the roots pair nontrivially, i < j, and j < s(i) (no bound when
s(i) does not exist).  The partial order puts i below j when an oriented
path runs from j down to i; since arrows always increase the position
index, the early positions are the high ones.

Subvarieties enter as order ideals: the down-closed vertex subsets are in
bijection with W^P (read the ideal's letters in increasing position order
to get a reduced word for its element), and containment of ideals is the
Bruhat order.  This is why the vertex set of an embedded quiver is a
marked subset of the big quiver rather than a quiver rebuilt from
scratch.

Hole bookkeeping, with the conventions pinned by cross-checking against
the Young-diagram singular locus on Grassmannians (the alternative
readings fail on the first singular example, the divisor in Gr(2,4)):

* a *real hole* of a marked quiver Q_w is a marked vertex i whose p(i) is
  unmarked or absent, such that exactly two marked vertices j != i with
  j >= i pair nontrivially with i;
* a *virtual hole* is an unmarked vertex i with no s(i) at all;
* a real hole is *essential* when no other real hole sits weakly above it.

A marked quiver is smooth exactly when it has no real holes, and each
essential hole h carves out one component of the singular locus: drop
everything weakly above h from the ideal and keep what remains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import RootSystem, minuscule_weights, root_system
from .weyl import MinusculePoset


@dataclass(frozen=True)
class Quiver:
    """A quiver on the positions of a reduced word, with a marked subset.

    ``members`` is the marked ideal (all positions for the full quiver).
    Positions are 0-based internally.
    """

    system: RootSystem
    word: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]
    members: frozenset[int]
    _reach: tuple[frozenset[int], ...] = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.word)

    def label(self, i: int) -> int:
        return self.word[i]

    def next_same(self, i: int) -> int | None:
        for j in range(i + 1, len(self.word)):
            if self.word[j] == self.word[i]:
                return j
        return None

    def prev_same(self, i: int) -> int | None:
        for j in range(i - 1, -1, -1):
            if self.word[j] == self.word[i]:
                return j
        return None

    def leq(self, a: int, b: int) -> bool:
        """a <= b in the quiver order (an oriented path runs b -> a)."""
        return a in self._reach[b]

    def above(self, i: int) -> frozenset[int]:
        """All j with j >= i, including i itself."""
        return frozenset(j for j in range(self.n_vertices) if self.leq(i, j))

    def is_ideal(self, subset) -> bool:
        subset = frozenset(subset)
        return all(self._reach[v] <= subset for v in subset)

    def marked(self, members) -> "Quiver":
        members = frozenset(members)
        if not members <= frozenset(range(self.n_vertices)):
            raise ValueError("members must be existing vertex positions")
        if not self.is_ideal(members):
            raise ValueError(f"{sorted(members)} is not an order ideal")
        return Quiver(self.system, self.word, self.arrows, members, self._reach)

    def subword(self, members=None) -> tuple[int, ...]:
        members = self.members if members is None else members
        return tuple(self.word[i] for i in sorted(members))

    def ideals(self) -> list[frozenset[int]]:
        """All order ideals, smallest first (graded by size)."""
        found = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            nxt = []
            for ideal in frontier:
                for v in range(self.n_vertices):
                    if v in ideal:
                        continue
                    if self._reach[v] - {v} <= ideal:
                        grown = ideal | {v}
                        if grown not in found:
                            found.add(grown)
                            nxt.append(grown)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))


def quiver_from_word(word, system: RootSystem, members=None) -> Quiver:
    """Build the quiver of a reduced word.

    Arrows: i -> j for i < j with nonzero Cartan pairing of the letters,
    bounded above by the next repetition s(i) of the letter of i.
    """
    word = tuple(word)
    for b in word:
        if not 1 <= b <= system.rank:
            raise ValueError(f"letter {b} out of range for {system}")
    N = len(word)
    nxt: list[int | None] = [None] * N
    last_seen: dict[int, int] = {}
    for i in range(N - 1, -1, -1):
        nxt[i] = last_seen.get(word[i])
        last_seen[word[i]] = i
    arrows = []
    for i in range(N):
        stop = nxt[i] if nxt[i] is not None else N
        for j in range(i + 1, stop):
            if system.pairing(word[i], word[j]) != 0:
                arrows.append((i, j))
    reach: list[frozenset[int]] = [frozenset()] * N
    for i in range(N - 1, -1, -1):
        acc = {i}
        for a, b in arrows:
            if a == i:
                acc |= reach[b]
        reach[i] = frozenset(acc)
    members = frozenset(range(N)) if members is None else frozenset(members)
    q = Quiver(system, word, tuple(arrows), frozenset(range(N)), tuple(reach))
    return q if members == frozenset(range(N)) else q.marked(members)


@dataclass(frozen=True)
class HoleReport:
    real: tuple[int, ...]
    virtual: tuple[int, ...]
    essential: tuple[int, ...]


def classify_holes(q: Quiver) -> HoleReport:
    """Real, virtual and essential holes of a marked quiver."""
    real = []
    for i in sorted(q.members):
        p = q.prev_same(i)
        if p is not None and p in q.members:
            continue
        count = 0
        for j in q.members:
            if j != i and q.leq(i, j) and q.system.pairing(q.label(j), q.label(i)) != 0:
                count += 1
        if count == 2:
            real.append(i)
    virtual = [
        i
        for i in range(q.n_vertices)
        if i not in q.members and q.next_same(i) is None
    ]
    essential = [
        i
        for i in real
        if not any(j != i and q.leq(i, j) for j in real)
    ]
    return HoleReport(tuple(real), tuple(virtual), tuple(essential))


def is_smooth_quiver(q: Quiver) -> bool:
    return not classify_holes(q).real


class MinusculeModel:
    """One minuscule pair (system, weight): poset, full quiver, dictionary.

    Bundles the weight-orbit poset with the quiver of the longest coset
    representative and the two-way map between order ideals and orbit
    nodes, which is what every geometric question gets translated into.
    """

    def __init__(self, system: RootSystem, weight_index: int):
        self.system = system
        self.weight_index = weight_index
        self.poset = MinusculePoset(system, weight_index)
        self.full = quiver_from_word(
            self.poset.canonical_word(self.poset.bottom), system
        )
        ideals = self.full.ideals()
        if len(ideals) != len(self.poset):
            raise AssertionError(
                f"{len(ideals)} ideals for {len(self.poset)} coset elements"
            )
        self.ideal_of_node: dict[tuple[int, ...], frozenset[int]] = {}
        self.node_of_ideal: dict[frozenset[int], tuple[int, ...]] = {}
        for ideal in ideals:
            node = self.poset.node_from_word(self.full.subword(ideal))
            if node in self.ideal_of_node or len(ideal) != self.poset.depth(node):
                raise AssertionError("ideal/coset dictionary is not a bijection")
            self.ideal_of_node[node] = ideal
            self.node_of_ideal[ideal] = node

    def quiver_of(self, node) -> Quiver:
        """The quiver of one Schubert variety: the full quiver with the
        node's ideal marked."""
        return self.full.marked(self.ideal_of_node[tuple(node)])

    def leq_nodes(self, a, b) -> bool:
        """Bruhat order via ideal containment."""
        return self.ideal_of_node[tuple(a)] <= self.ideal_of_node[tuple(b)]

    def holes(self, node) -> HoleReport:
        return classify_holes(self.quiver_of(node))

    def is_smooth(self, node) -> bool:
        return is_smooth_quiver(self.quiver_of(node))

    def singular_components(self, node) -> list[tuple[int, ...]]:
        """Nodes indexing the components of the singular locus."""
        q = self.quiver_of(node)
        report = classify_holes(q)
        out = []
        for h in report.essential:
            rest = frozenset(i for i in q.members if not q.leq(h, i))
            comp = self.node_of_ideal[rest]
            if comp not in out:
                out.append(comp)
        return out

    def semistable_in_smooth(self, w_node, v_node) -> bool:
        """Criterion: every essential hole of Q_w lies in the ideal of v.

        ``v_node`` is the minimal element with semistable points; ``w_node``
        must dominate it, otherwise there is nothing to test.
        """
        if not self.leq_nodes(v_node, w_node):
            raise ValueError("w does not dominate v: no semistable points")
        v_ideal = self.ideal_of_node[tuple(v_node)]
        report = classify_holes(self.quiver_of(w_node))
        return all(h in v_ideal for h in report.essential)


def minimal_v_word(family: str, rank: int, weight_index: int) -> tuple[int, ...]:
    """Reduced word of the minimal coset element with semistable points.

    Closed forms per family; the excluded pairs (the defining weight of
    type A at either end of the diagram, where the torus never has
    semistable points on a proper Schubert variety in the needed sense)
    raise.
    """
    system = root_system(family, rank)
    if weight_index not in minuscule_weights(family, rank):
        raise ValueError(f"omega_{weight_index} is not minuscule for {system}")
    if family == "A":
        n = rank + 1
        r = weight_index
        if r in (1, n - 1):
            raise ValueError(
                "projective space has no singular Schubert varieties; "
                "the quiver criterion degenerates for omega_1 / omega_{n-1}"
            )
        from .grassmannian import minimal_semistable

        entries = minimal_semistable(r, n)
        word = []
        for j, a in enumerate(entries, start=1):
            word.extend(range(a - 1, j - 1, -1))
        return tuple(word)
    if family == "D":
        n = rank
        if weight_index == 1:
            return tuple(range(n, 0, -1))
        # spin weights: the two fork letters strictly alternate between the
        # factors, and the factor nearest the top must reflect at the weight
        # index itself, which pins the whole alternation
        fork_odd = weight_index
        fork_even = n - 1 if weight_index == n else n
        pieces = []
        top = n // 2 if n % 2 == 0 else n // 2 + 1
        for i in range(top, 0, -1):
            tau = list(range(2 * i - 1, n - 1))
            fork = fork_even if i % 2 == 0 else fork_odd
            pieces.extend(tau + [fork])
        return tuple(pieces)
    if family == "E6":
        base = (5, 6, 1, 3, 4, 5, 2, 4, 3, 1)
        if weight_index == 1:
            return base
        mirror = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
        return tuple(mirror[b] for b in base)
    return (5, 2, 4, 3, 7, 6, 5, 4, 1, 2, 3, 4, 5, 6, 7)


def quiver_to_dot(q: Quiver, graph_name: str = "quiver") -> str:
    """Deterministic Graphviz rendering of a marked quiver.

    Vertices carry their simple-root index as label; unmarked vertices are
    dotted, real holes get a second periphery.  Byte-identical output for
    identical input is part of the contract, so everything is emitted in
    sorted position order.
    """
    report = classify_holes(q) if q.n_vertices else HoleReport((), (), ())
    real = set(report.real)
    lines = [f"digraph {graph_name} {{", "  rankdir=TB;"]
    for i in range(q.n_vertices):
        attrs = [f'label="{q.label(i)}"', "shape=circle"]
        if i in real:
            attrs.append("peripheries=2")
        if i not in q.members:
            attrs.append("style=dotted")
        lines.append(f"  v{i} [{', '.join(attrs)}];")
    for a, b in sorted(q.arrows):
        style = "" if a in q.members and b in q.members else " [style=dotted]"
        lines.append(f"  v{a} -> v{b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def commutation_moves(word, system: RootSystem) -> list[tuple[int, tuple[int, ...]]]:
    """All words one commutation move away, with the swapped position.

    Two adjacent letters may trade places when their simple roots do not
    pair; the position-swap bijection is then a quiver isomorphism, which
    is what makes the quiver a well-defined invariant of the element.
    """
    word = tuple(word)
    return [
        (p, word[:p] + (word[p + 1], word[p]) + word[p + 2 :])
        for p in range(len(word) - 1)
        if system.pairing(word[p], word[p + 1]) == 0
    ]


def quivers_isomorphic_under_swap(qa: Quiver, qb: Quiver, p: int) -> bool:
    """Check the canonical isomorphism for a commutation move at p, p+1."""
    n = qa.n_vertices
    if qb.n_vertices != n:
        return False

    def sigma(i: int) -> int:
        if i == p:
            return p + 1
        if i == p + 1:
            return p
        return i

    if any(qb.label(sigma(i)) != qa.label(i) for i in range(n)):
        return False
    if {(sigma(a), sigma(b)) for a, b in qa.arrows} != set(qb.arrows):
        return False
    return all(
        qa.leq(a, b) == qb.leq(sigma(a), sigma(b))
        for a in range(n)
        for b in range(n)
    )
