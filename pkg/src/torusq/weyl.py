"""Weyl-group combinatorics.

Symmetric-group elements are tuples in one-line notation, ``w[i]`` being the
image of position ``i+1``.  Words are tuples of simple-reflection indices.
A word acts on the right of a permutation letter by letter, nearest letter
first: ``word_to_perm((4, 5, 6, 3, 2, 1), 7)`` means
``s4*s5*s6*s3*s2*s1`` and comes out as ``(5, 1, 2, 3, 6, 7, 4)``.  In
practical terms, reading the word left to right and swapping the two values
in positions ``i`` and ``i+1`` of the one-line string reproduces exactly
that product, which is how everything here is computed.

The second half of the module builds the weight-orbit poset of a minuscule
fundamental weight for any of the simply laced families.  Nodes are weights
in fundamental coordinates; every coordinate of an orbit weight is -1, 0 or
1, which is what makes the canonical-word and length bookkeeping trivial.
"""

from itertools import permutations

from .rootdata import fundamental_weight, minuscule_weights, reflect


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n):
    return tuple(range(1, n + 1))


def check_perm(w):
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{n}")


def right_multiply(w, i):
    """w * s_i: swap the values in positions i and i+1 (1-based)."""
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"reflection index {i} out of range for n={len(w)}")
    line = list(w)
    line[i - 1], line[i] = line[i], line[i - 1]
    return tuple(line)


def word_to_perm(word, n):
    """Product of simple reflections, rightmost letter applied first."""
    w = identity_perm(n)
    for i in word:
        w = right_multiply(w, i)
    return w


def perm_mult(u, v):
    """Composition u * v (v applied first): (u*v)(i) = u(v(i))."""
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return tuple(u[x - 1] for x in v)


def perm_inverse(w):
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def perm_length(w):
    """Number of inversions = Coxeter length."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def descents(w):
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def reduced_word(w):
    """Some reduced word for w (the descent-stripping one)."""
    check_perm(w)
    letters = []
    cur = w
    while True:
        ds = descents(cur)
        if not ds:
            break
        letters.append(ds[0])
        cur = right_multiply(cur, ds[0])
    letters.reverse()
    return tuple(letters)


def pi_projection(w, i):
    """Sorted tuple of the first i values of w."""
    if not 0 <= i <= len(w):
        raise ValueError(f"projection index {i} out of range")
    return tuple(sorted(w[:i]))


def bruhat_leq(u, w):
    """Bruhat order on the symmetric group via sorted-prefix dominance.

    u <= w iff for every i the sorted first-i values of u dominate those of
    w entry by entry... more precisely, each entry of the sorted i-prefix of
    u is <= the corresponding entry for w.
    """
    if len(u) != len(w):
        raise ValueError("size mismatch")
    n = len(u)
    pu = []
    pw = []
    for i in range(n - 1):
        # maintain sorted prefixes incrementally
        from bisect import insort

        insort(pu, u[i])
        insort(pw, w[i])
        for a, b in zip(pu, pw):
            if a > b:
                return False
    return True


# ---------------------------------------------------------------------------
# parabolic subgroups of S_n, given by a set I of simple-reflection indices


def parabolic_blocks(I, n):
    """Position blocks [a..b] glued by the reflections in I.

    Each maximal run of consecutive indices i in I ties together positions
    i, i+1, ...; positions untouched by I sit in singleton blocks.
    """
    I = set(I)
    for i in I:
        if not 1 <= i <= n - 1:
            raise ValueError(f"simple reflection index {i} out of range")
    blocks = []
    p = 1
    while p <= n:
        q = p
        while q <= n - 1 and q in I:
            q += 1
        blocks.append((p, q))
        p = q + 1
    return blocks


def min_coset_rep(w, I):
    """Minimal-length representative of the coset w W_I.

    Sorting the values of w inside every block ascending kills all the
    inversions that live inside W_I and no others.
    """
    check_perm(w)
    line = list(w)
    for a, b in parabolic_blocks(I, len(w)):
        line[a - 1 : b] = sorted(line[a - 1 : b])
    return tuple(line)


def max_parabolic_element(I, n):
    """Longest element of the parabolic subgroup W_I (block reversal)."""
    line = list(range(1, n + 1))
    for a, b in parabolic_blocks(I, n):
        line[a - 1 : b] = reversed(line[a - 1 : b])
    return tuple(line)


def maximal_lift(w, I):
    """Maximal-length representative w^I * w_{0,I} of the coset w W_I."""
    check_perm(w)
    line = list(w)
    for a, b in parabolic_blocks(I, len(w)):
        line[a - 1 : b] = sorted(line[a - 1 : b], reverse=True)
    return tuple(line)


def coset_elements(w, I):
    """All elements of w W_I (cartesian product of block rearrangements)."""
    check_perm(w)
    blocks = parabolic_blocks(I, len(w))
    reps = [tuple(w)]
    for a, b in blocks:
        new = []
        for line in reps:
            for arrangement in permutations(line[a - 1 : b]):
                cand = list(line)
                cand[a - 1 : b] = arrangement
                new.append(tuple(cand))
        reps = list(dict.fromkeys(new))
    return reps


# ---------------------------------------------------------------------------
# minuscule weight-orbit posets


class MinusculePoset:
    """The W-orbit of a minuscule fundamental weight, graded by length.

    Nodes are weight tuples in fundamental coordinates.  The top node is the
    dominant weight itself (the identity coset); going down one level
    subtracts a simple root.  The depth of a node equals the Coxeter length
    of the minimal coset representative it stands for, so the unique deepest
    node is the longest element of W^P.
    """

    def __init__(self, system, weight_index):
        if weight_index not in minuscule_weights(system.family, system.rank):
            raise ValueError(
                f"omega_{weight_index} is not minuscule for {system}"
            )
        self.system = system
        self.weight_index = weight_index
        self.top = fundamental_weight(system, weight_index)
        self._depth = {self.top: 0}
        self.nodes = [self.top]
        frontier = [self.top]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(1, system.rank + 1):
                    if mu[i - 1] == 1:
                        child = reflect(system, mu, i)
                        if child not in self._depth:
                            self._depth[child] = self._depth[mu] + 1
                            self.nodes.append(child)
                            nxt.append(child)
            frontier = nxt
        for mu in self.nodes:
            if any(c not in (-1, 0, 1) for c in mu):
                raise AssertionError(f"non-minuscule coordinate in orbit: {mu}")
        deepest = max(self._depth.values())
        bottoms = [mu for mu, d in self._depth.items() if d == deepest]
        if len(bottoms) != 1:
            raise AssertionError("orbit has no unique bottom element")
        self.bottom = bottoms[0]

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, mu):
        return tuple(mu) in self._depth

    def depth(self, mu):
        return self._depth[tuple(mu)]

    def canonical_word(self, mu):
        """Canonical reduced word of the coset representative of ``mu``.

        Walk up to the top, always raising along the smallest simple root
        whose coordinate is -1; the letters in the order encountered spell
        the word left to right.
        """
        mu = tuple(mu)
        if mu not in self._depth:
            raise ValueError(f"{mu} is not in the orbit")
        word = []
        cur = mu
        while cur != self.top:
            i = next(k for k in range(1, self.system.rank + 1) if cur[k - 1] == -1)
            word.append(i)
            cur = reflect(self.system, cur, i)
        return tuple(word)

    def node_from_word(self, word):
        """Apply a word to the top weight, rightmost letter first."""
        cur = self.top
        for i in reversed(tuple(word)):
            cur = reflect(self.system, cur, i)
        if cur not in self._depth:
            raise AssertionError("left the orbit, which cannot happen")
        return cur

    def word_descends(self, word):
        """True if the word is reduced as a coset representative.

        Each letter, applied nearest-first, must strictly lower the weight
        (coordinate +1 at its index); then len(word) == depth of the result.
        """
        cur = self.top
        for i in reversed(tuple(word)):
            if cur[i - 1] != 1:
                return False
            cur = reflect(self.system, cur, i)
        return True

    # convenience for type A, where cosets are index sets

    def permutation(self, mu):
        """One-line form of the minimal representative (type A only)."""
        if self.system.family != "A":
            raise ValueError("permutations only make sense in type A")
        n = self.system.rank + 1
        return word_to_perm(self.canonical_word(mu), n)

    def indexset(self, mu):
        """The r-element column set of the node (type A only)."""
        return pi_projection(self.permutation(mu), self.weight_index)

    def node_of_indexset(self, entries):
        """Inverse of :meth:`indexset` (type A only; linear scan)."""
        entries = tuple(sorted(entries))
        for mu in self.nodes:
            if self.indexset(mu) == entries:
                return mu
        raise ValueError(f"{entries} is not a node of this orbit")
