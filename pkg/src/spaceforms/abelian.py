"""Finite abelian group structure: invariant factors from group data.

The decomposition works per prime: counting solutions of a^(p^j) = e recovers
the conjugate partition of the p-exponents, and merging the per-prime
exponent lists (largest with largest) yields the invariant factor chain.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class AbelianGroup:
    """Invariant factors d_1 | d_2 | ... | d_k, ascending; empty means trivial."""

    invariant_factors: tuple

    def __post_init__(self):
        fs = self.invariant_factors
        for a, b in zip(fs, fs[1:]):
            assert b % a == 0, f"not a divisibility chain: {fs}"
        assert all(f >= 2 for f in fs)

    @property
    def order(self):
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    @property
    def mod2_rank(self):
        return sum(1 for f in self.invariant_factors if f % 2 == 0)

    def is_trivial(self):
        return not self.invariant_factors

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{f}" for f in self.invariant_factors)

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors)}


def _prime_factors(n):
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        ps.append(n)
    return ps


def invariants_from_orders(orders):
    """Invariant factors of a finite abelian group from the multiset of all
    element orders (one entry per element, identity included)."""
    n = len(orders)
    if n == 1:
        return ()
    per_prime = {}
    for p in _prime_factors(n):
        lams = []
        prev = 1
        j = 1
        while True:
            pj = p ** j
            c = sum(1 for o in orders if pj % o == 0)
            if c == prev:
                break
            ratio, e = c // prev, 0
            assert c % prev == 0
            t = ratio
            while t > 1:
                assert t % p == 0
                t //= p
                e += 1
            lams.append(e)
            prev = c
            j += 1
        if lams:
            # conjugate partition -> exponent list, descending
            exps = [sum(1 for lam in lams if lam >= i) for i in range(1, lams[0] + 1)]
            per_prime[p] = exps
    if not per_prime:
        return ()
    width = max(len(v) for v in per_prime.values())
    factors = []
    for t in range(width):
        f = 1
        for p, exps in per_prime.items():
            if t < len(exps):
                f *= p ** exps[t]
        factors.append(f)
    factors = [f for f in factors if f > 1]
    factors.sort()
    return tuple(factors)


def abelian_invariants(size, mul, inv, gen_idxs, identity=0):
    """Invariant factors of the abelianization of a finite group given as
    index arithmetic (mul, inv callables on 0..size-1).

    The derived subgroup is generated by the commutators [s, g] with s a
    generator and g arbitrary: in the quotient by these every generator is
    central, so the quotient is abelian; conversely all are commutators.
    """
    comms = set()
    for s in set(gen_idxs):
        s_inv = inv(s)
        for g in range(size):
            comms.add(mul(mul(mul(s, g), s_inv), inv(g)))
    comms.discard(identity)
    # close under multiplication
    derived = {identity}
    frontier = [identity]
    gens = sorted(comms)
    while frontier:
        new = []
        for s in gens:
            for b in frontier:
                c = mul(s, b)
                if c not in derived:
                    derived.add(c)
                    new.append(c)
        frontier = new
    # left cosets of the (normal) derived subgroup
    coset_id = [-1] * size
    reps = []
    for x in range(size):
        if coset_id[x] == -1:
            cid = len(reps)
            reps.append(x)
            for d in derived:
                coset_id[mul(x, d)] = cid
    ident_c = coset_id[identity]

    def cmul(a, b):
        return coset_id[mul(reps[a], reps[b])]

    # orders by walking each cyclic subgroup once: ord(a^t) = m / gcd(t, m)
    from math import gcd as _gcd

    orders = [0] * len(reps)
    orders[ident_c] = 1
    for a in range(len(reps)):
        if orders[a]:
            continue
        chain = [a]
        cur = a
        while True:
            cur = cmul(cur, a)
            if cur == ident_c:
                break
            chain.append(cur)
        m = len(chain) + 1
        for t, x in enumerate(chain, start=1):
            orders[x] = m // _gcd(t, m)
    return invariants_from_orders(orders)
