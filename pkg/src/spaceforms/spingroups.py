"""Finite subgroups of S^3 x S^3 acting on the 3-sphere.

A SpinPair (l, r) acts on a unit quaternion x by x -> l x conj(r); the pair
(-l, -r) induces the same SO(4) element, so a group G of isometries is stored
as its full preimage Gtilde (always containing +-(1,1)) and |G| = |Gtilde|/2.

After closure every group carries a left-regular permutation table, so all
structural queries (orders, commutators, abelianizations) are integer-only.
"""

from .abelian import AbelianGroup, abelian_invariants
from .cyclotomic import FieldElement
from .errors import CapExceeded, ConductorMismatch, NotAMember, ValidationError
from .quaternions import (
    UnitQuaternion,
    minus_one,
    one,
    quat_from_json,
    quat_to_json,
)

DEFAULT_CAP = 2400


class SpinPair:
    __slots__ = ("left", "right", "_hash")

    def __init__(self, left, right):
        if left.conductor != right.conductor:
            raise ConductorMismatch("pair components have different conductors")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash((left, right)))

    def __setattr__(self, *a):
        raise AttributeError("SpinPair is immutable")

    @property
    def conductor(self):
        return self.left.conductor

    def __mul__(self, other):
        return SpinPair(self.left * other.left, self.right * other.right)

    def inverse(self):
        return SpinPair(self.left.conj(), self.right.conj())

    def __neg__(self):
        return SpinPair(-self.left, -self.right)

    def swap(self):
        return SpinPair(self.right, self.left)

    def is_identity(self):
        return self.left.is_one() and self.right.is_one()

    def is_minus_identity(self):
        return self.left.is_minus_one() and self.right.is_minus_one()

    def embed(self, conductor):
        return SpinPair(self.left.embed(conductor), self.right.embed(conductor))

    def __eq__(self, other):
        return (
            isinstance(other, SpinPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SpinPair({self.left!r}, {self.right!r})"


def identity_pair(conductor):
    return SpinPair(one(conductor), one(conductor))


def minus_identity_pair(conductor):
    return SpinPair(minus_one(conductor), minus_one(conductor))


def act(g, x):
    """The SO(4) action: x -> l x conj(r)."""
    if g.conductor != x.conductor:
        raise ConductorMismatch("act: conductor mismatch")
    return g.left * x * g.right.conj()


class SpinGroup:
    """A finite, multiplicatively closed set of SpinPairs.

    Groups produced by `closure` and the family builders contain (-1,-1) and
    are closed under negation (`pm_closed`); one-factor projections are closed
    sets of pairs with the other component equal to 1 and are not pm_closed.
    """

    def __init__(self, conductor, elements, generators, pm_closed, _trusted=False):
        self.conductor = conductor
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.pm_closed = pm_closed
        self._index = {e: i for i, e in enumerate(self.elements)}
        if not _trusted:
            raise ValueError("use closure() or the family builders")
        self._table = None
        self._inv = None
        self._class_data = None
        self._genrows = None  # closure-recorded generator rows (int level)
        self._factor_data = None  # (parent, fmap, reps) for projections
        self._proj_cache = {}
        self._cls_cache = None
        self._free_cache = -1
        self._ab_cache = None
        self._cyclic_cache = None

    # -- construction helpers (module-level closure() is the public path) ---

    @classmethod
    def _from_closed(cls, conductor, elements, generators, pm_closed):
        return cls(conductor, elements, generators, pm_closed, _trusted=True)

    def _effective_generators(self):
        """Generators that provably generate the stored element set."""
        gens = list(self.generators)
        if self.pm_closed:
            m = minus_identity_pair(self.conductor)
            if m not in gens:
                gens.append(m)
        else:
            # projections: the image of (-1,-1) on the kept side
            for e in self.elements:
                if e.left.is_minus_one() or e.right.is_minus_one():
                    if e not in gens and (e.left.is_one() or e.right.is_one()):
                        gens.append(e)
                        break
        return [g for g in gens if not g.is_identity()]

    # -- sizes ---------------------------------------------------------------

    @property
    def num_pairs(self):
        return len(self.elements)

    @property
    def order(self):
        """Order of the represented group G = Gtilde / {+-1}."""
        assert self.pm_closed, "order is defined for pm-closed groups"
        return len(self.elements) // 2

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, pair):
        return pair in self._index

    def __eq__(self, other):
        return isinstance(other, SpinGroup) and set(self.elements) == set(
            other.elements
        )

    def __hash__(self):
        return hash(frozenset(self.elements))

    # -- regular representation ----------------------------------------------

    def table(self):
        """Left-regular permutation table: table[i][j] = index(e_i * e_j).

        Built by composing the generator permutations along the Cayley
        graph, so after the initial generator rows everything is integer
        work; closures record their generator rows for free.
        """
        if self._table is None:
            if self._factor_data is not None:
                parent, fmap, reps = self._factor_data
                ptable = parent.table()
                self._table = [
                    tuple(fmap[ptable[ra][rb]] for rb in reps) for ra in reps
                ]
                return self._table
            n = len(self.elements)
            idx = self._index
            if self._genrows is not None:
                genrows = self._genrows
            else:
                gens = self._effective_generators()
                genrows = [
                    tuple(idx[g * e] for e in self.elements) for g in gens
                ]
            rows = [None] * n
            start = idx[identity_pair(self.conductor)]
            rows[start] = tuple(range(n))
            frontier = [start]
            while frontier:
                new = []
                for grow in genrows:
                    for ci in frontier:
                        ti = grow[ci]
                        if rows[ti] is None:
                            rci = rows[ci]
                            rows[ti] = tuple(grow[x] for x in rci)
                            new.append(ti)
                frontier = new
            assert all(r is not None for r in rows), "generators do not generate"
            self._table = rows
        return self._table

    def mul_index(self, i, j):
        """index(e_i * e_j) without materializing the full table."""
        if self._table is not None:
            return self._table[i][j]
        if self._factor_data is not None:
            parent, fmap, reps = self._factor_data
            return fmap[parent.table()[reps[i]][reps[j]]]
        return self.table()[i][j]

    def _inverses(self):
        if self._inv is None:
            if self._table is None and self._factor_data is not None:
                parent, fmap, reps = self._factor_data
                pinv = parent._inverses()
                self._inv = [fmap[pinv[r]] for r in reps]
            else:
                start = self._index[identity_pair(self.conductor)]
                self._inv = [row.index(start) for row in self.table()]
        return self._inv

    def index_of(self, pair):
        try:
            return self._index[pair]
        except KeyError:
            raise NotAMember(f"pair not in group: {pair!r}") from None

    # -- sign classes (G = Gtilde / +-) ---------------------------------------

    def _classes(self):
        if self._class_data is None:
            assert self.pm_closed
            table = self.table()
            minus_idx = self._index[minus_identity_pair(self.conductor)]
            neg = table[minus_idx]
            reps = [i for i in range(len(self.elements)) if i <= neg[i]]
            pos = [-1] * len(self.elements)
            for p, r in enumerate(reps):
                pos[r] = p
                pos[neg[r]] = p
            self._class_data = (reps, pos)
        return self._class_data

    def class_count(self):
        return len(self._classes()[0])

    def class_mul(self, a, b):
        reps, pos = self._classes()
        return pos[self.table()[reps[a]][reps[b]]]

    def class_inv(self, a):
        reps, pos = self._classes()
        return pos[self._inverses()[reps[a]]]

    def class_of(self, pair):
        return self._classes()[1][self.index_of(pair)]

    def class_order(self, a):
        o, cur = 1, a
        while cur != 0:
            cur = self.class_mul(cur, a)
            o += 1
        return o

    def class_representative(self, a):
        return self.elements[self._classes()[0][a]]

    # -- structural queries ----------------------------------------------------

    def fixed_point_witness(self):
        """A pair outside {+-(1,1)} with equal component real parts, or None.

        l x conj(r) = x has a unit solution x iff l and r are conjugate in
        S^3, i.e. iff they have equal real parts (exact field comparison).
        """
        if self._free_cache != -1:
            return self._free_cache
        witness = None
        for e in self.elements:
            if e.is_identity() or e.is_minus_identity():
                continue
            if e.left.trace() == e.right.trace():
                witness = e
                break
        self._free_cache = witness
        return witness

    def is_free(self):
        return self.fixed_point_witness() is None

    def project(self, side):
        """One-factor image as a closed set of pairs (other component = 1)."""
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if side in self._proj_cache:
            return self._proj_cache[side]
        ident = one(self.conductor)
        fmap = []  # parent element index -> factor element index
        fidx = {}
        out = []
        for e in self.elements:
            comp = e.left if side == "left" else e.right
            pos = fidx.get(comp)
            if pos is None:
                pos = len(out)
                fidx[comp] = pos
                out.append(
                    SpinPair(comp, ident) if side == "left" else SpinPair(ident, comp)
                )
            fmap.append(pos)
        gens = []
        gseen = set()
        for g in self.generators:
            comp = g.left if side == "left" else g.right
            p = SpinPair(comp, ident) if side == "left" else SpinPair(ident, comp)
            if p not in gseen:
                gseen.add(p)
                gens.append(p)
        grp = SpinGroup._from_closed(self.conductor, out, gens, pm_closed=False)
        # the projection is a homomorphism, so its table is the image of the
        # parent table through any choice of preimage representatives
        parent = self.table()
        reps = [None] * len(out)
        for i, pos in enumerate(fmap):
            if reps[pos] is None:
                reps[pos] = i
        grp._table = [
            tuple(fmap[parent[ra][rb]] for rb in reps) for ra in reps
        ]
        self._proj_cache[side] = grp
        return grp

    def swap_orientation(self):
        """The group of the orientation-reversed quotient: components swapped.

        Swapping is a multiplication-preserving relabeling in element order,
        so the permutation table and everything derived from it carry over.
        """
        grp = SpinGroup._from_closed(
            self.conductor,
            [e.swap() for e in self.elements],
            [g.swap() for g in self.generators],
            pm_closed=self.pm_closed,
        )
        grp._table = self._table
        grp._genrows = self._genrows
        grp._inv = self._inv
        grp._class_data = self._class_data
        grp._ab_cache = self._ab_cache
        grp._cyclic_cache = self._cyclic_cache
        # the freeness criterion compares the two traces, so it is symmetric
        if self._free_cache != -1:
            grp._free_cache = (
                None if self._free_cache is None else self._free_cache.swap()
            )
        return grp

    def conjugated(self, pair):
        """Conjugate by a fixed SpinPair (an SO(4) change of coordinates)."""
        p_inv = pair.inverse()
        mapped = [SpinPair(
            pair.left * e.left * p_inv.left, pair.right * e.right * p_inv.right
        ) for e in self.elements]
        gens = [SpinPair(
            pair.left * g.left * p_inv.left, pair.right * g.right * p_inv.right
        ) for g in self.generators]
        return SpinGroup._from_closed(self.conductor, mapped, gens, self.pm_closed)

    def abelianization(self):
        """H_1-style abelianization of G = Gtilde / {+-1}."""
        assert self.pm_closed
        if self._ab_cache is not None:
            return self._ab_cache
        reps, pos = self._classes()
        gen_classes = {
            pos[self._index[g]] for g in self._effective_generators()
        }
        inv = abelian_invariants(
            len(reps), self.class_mul, self.class_inv, gen_classes, identity=0
        )
        self._ab_cache = AbelianGroup(inv)
        return self._ab_cache

    def full_abelian_invariants(self):
        """Abelianization of the stored pair set itself (no sign quotient)."""
        table = self.table()
        invs = self._inverses()
        gen_idx = {self._index[g] for g in self._effective_generators()}
        ident = self._index[identity_pair(self.conductor)]
        return abelian_invariants(
            len(self.elements),
            lambda a, b: table[a][b],
            lambda a: invs[a],
            gen_idx,
            identity=ident,
        )

    def is_abelian(self):
        table = self.table()
        gidx = [self._index[g] for g in self._effective_generators()]
        return all(table[a][b] == table[b][a] for a in gidx for b in gidx)

    def is_cyclic(self):
        """Whether G = Gtilde/+- is cyclic (searches for a generating class)."""
        assert self.pm_closed
        if self._cyclic_cache is None:
            m = self.class_count()
            self._cyclic_cache = any(
                self.class_order(a) == m for a in range(m)
            )
        return self._cyclic_cache

    def element_order(self, pair):
        """Order of the sign class of `pair` in G; raises NotAMember."""
        assert self.pm_closed
        return self.class_order(self.class_of(pair))

    def has_element_of_order(self, k):
        """A representative pair whose sign class has order k, or None."""
        assert self.pm_closed
        for a in range(self.class_count()):
            if self.class_order(a) == k:
                return self.class_representative(a)
        return None

    def __repr__(self):
        kind = "pm" if self.pm_closed else "factor"
        return (
            f"SpinGroup(N={self.conductor}, pairs={len(self.elements)}, {kind})"
        )


# ---------------------------------------------------------------------------
# Closure

def closure(generators, conductor=None, cap=DEFAULT_CAP):
    """Smallest multiplicatively closed set containing the generators and
    (-1,-1); breadth-first, deterministic element order."""
    gens = list(generators)
    if conductor is None:
        conductor = 4
        for g in gens:
            conductor = _lcm(conductor, g.conductor)
    gens = [g.embed(conductor) for g in gens]
    eff = [g for g in gens if not g.is_identity()]
    eff.append(minus_identity_pair(conductor))
    ident = identity_pair(conductor)
    index = {ident: 0}
    elements = [ident]
    frontier = [ident]
    # every element passes through the frontier exactly once, so the BFS
    # already computes g*e for every generator and element: keep the rows
    genrow_maps = [dict() for _ in eff]
    while frontier:
        new = []
        for gi, g in enumerate(eff):
            row = genrow_maps[gi]
            for b in frontier:
                c = g * b
                ci = index.get(c)
                if ci is None:
                    ci = len(elements)
                    index[c] = ci
                    elements.append(c)
                    new.append(c)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap of {cap} pairs"
                        )
                row[index[b]] = ci
        frontier = new
    grp = SpinGroup._from_closed(conductor, elements, gens, pm_closed=True)
    n = len(elements)
    grp._genrows = [tuple(row[i] for i in range(n)) for row in genrow_maps]
    return grp


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Spec-surface functions

def is_free(group):
    return group.is_free()


def project(group, side):
    return group.project(side)


def abelianization(group):
    return group.abelianization()


def swap_orientation(group):
    return group.swap_orientation()


def element_order(pair, group):
    return group.element_order(pair)


def has_element_of_order(group, k):
    return group.has_element_of_order(k)


# ---------------------------------------------------------------------------
# Serialization

def pair_to_json(p):
    return {"left": quat_to_json(p.left), "right": quat_to_json(p.right)}


def pair_from_json(obj):
    return SpinPair(quat_from_json(obj["left"]), quat_from_json(obj["right"]))


def group_to_json(group, include_elements=False):
    out = {
        "conductor": group.conductor,
        "generators": [pair_to_json(g) for g in group.generators],
    }
    if include_elements:
        out["elements"] = [pair_to_json(e) for e in group.elements]
    return out


def group_from_json(obj, cap=DEFAULT_CAP):
    """Rebuild a group; when elements are cached, re-verify them against the
    closure of the generators."""
    conductor = int(obj["conductor"])
    gens = [pair_from_json(g) for g in obj["generators"]]
    grp = closure(gens, conductor=conductor, cap=cap)
    if "elements" in obj:
        cached = {pair_from_json(e) for e in obj["elements"]}
        if cached != set(grp.elements):
            raise ValidationError(
                "cached element list does not match the closure of the generators"
            )
    return grp
