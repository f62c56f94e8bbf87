"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as integer coordinate vectors over a common denominator,
in the power basis 1, zeta, zeta^2, ... of length deg Phi_N.  All arithmetic
is reduced modulo the N-th cyclotomic polynomial Phi_N, so representations
are unique and equality is coefficient-wise.  No floating point anywhere.

Complex conjugation is the field automorphism zeta -> zeta^(N-1).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConductorMismatch, DivisionByZero, NotADivisor


# ---------------------------------------------------------------------------
# Integer polynomials (ascending coefficient lists)

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_divmod_exact(a, b):
    """Divide a by monic b over Z; remainder must come out zero for our uses."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    assert b[-1] == 1, "divisor must be monic"
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N):
    """Phi_N as an ascending integer coefficient tuple.

    Computed by dividing x^N - 1 by Phi_d for every proper divisor d of N.
    """
    if N < 1:
        raise ValueError("conductor must be a positive integer")
    if N == 1:
        return (-1, 1)
    poly = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod_exact(poly, list(cyclotomic_polynomial(d)))
            assert rem == [0]
    return tuple(poly)


class _Context:
    """Per-conductor tables: reduction rows and zeta-power representatives."""

    def __init__(self, N):
        self.N = N
        phi = cyclotomic_polynomial(N)
        self.phi = phi
        d = len(phi) - 1
        self.degree = d
        # rows[e - d] = coordinates of x^e mod Phi_N for e in [d, 2d - 2];
        # integer vectors since Phi_N is monic over Z.
        rows = []
        cur = [-c for c in phi[:d]]
        rows.append(tuple(cur))
        for _ in range(d + 1, 2 * d - 1):
            top = cur[d - 1]
            cur = [0] + cur[: d - 1]
            if top:
                base = rows[0]
                cur = [cur[t] + top * base[t] for t in range(d)]
            rows.append(tuple(cur))
        self.rows = rows
        # zeta^e for e in [0, N): reduced power-basis vectors.
        powers = []
        vec = [0] * d
        if d == 1:
            # N in {1, 2}: zeta is rational (1 or -1).
            z = 1 if N == 1 else -1
            powers = [(z ** (e % 2),) if N == 2 else (1,) for e in range(N)]
        else:
            for e in range(N):
                if e < d:
                    vec = [0] * d
                    vec[e] = 1
                    powers.append(tuple(vec))
                else:
                    prev = powers[e - 1]
                    top = prev[d - 1]
                    nxt = [0] + list(prev[: d - 1])
                    if top:
                        base = rows[0]
                        nxt = [nxt[t] + top * base[t] for t in range(d)]
                    powers.append(tuple(nxt))
        self.zeta_powers = powers
        self.zeta_powers_nz = [
            tuple((i, c) for i, c in enumerate(row) if c) for row in powers
        ]


@lru_cache(maxsize=None)
def _context(N):
    return _Context(N)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class FieldElement:
    """An element of Q(zeta_N): integer coordinates over a common denominator."""

    __slots__ = ("conductor", "num", "den", "_hash", "_nz")

    def __init__(self, conductor, num, den=1, _normalized=False):
        ctx = _context(conductor)
        num = tuple(num)
        if len(num) != ctx.degree:
            raise ValueError(
                f"expected {ctx.degree} coordinates for conductor {conductor}, got {len(num)}"
            )
        if den == 0:
            raise DivisionByZero("zero denominator")
        if not _normalized:
            num, den = _normalize(list(num), den)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", hash((conductor, num, den)))
        object.__setattr__(self, "_nz", None)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, conductor, p, q=1):
        ctx = _context(conductor)
        num = [0] * ctx.degree
        num[0] = p
        return cls(conductor, num, q)

    @classmethod
    def from_fractions(cls, conductor, coeffs):
        ctx = _context(conductor)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != ctx.degree:
            raise ValueError("coefficient vector has wrong length")
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        num = [int(f * den) for f in fracs]
        return cls(conductor, num, den)

    # -- queries -----------------------------------------------------------

    @property
    def coeffs(self):
        """Coordinates as Fractions in the power basis."""
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def nonzeros(self):
        nz = self._nz
        if nz is None:
            nz = tuple((i, c) for i, c in enumerate(self.num) if c)
            object.__setattr__(self, "_nz", nz)
        return nz

    def is_zero(self):
        return not self.nonzeros

    def is_rational(self):
        return all(c == 0 for c in self.num[1:])

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.conductor == other.conductor
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.num):
            if c:
                frac = Fraction(c, self.den)
                terms.append(f"{frac}*z^{k}" if k else f"{frac}")
        body = " + ".join(terms) if terms else "0"
        return f"FieldElement(N={self.conductor}, {body})"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.conductor != self.conductor:
            raise ConductorMismatch(
                f"conductors differ: {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other):
        self._check(other)
        if not self.nonzeros:
            return other
        if not other.nonzeros:
            return self
        da, db = self.den, other.den
        num = [a * db + b * da for a, b in zip(self.num, other.num)]
        return FieldElement(self.conductor, num, da * db)

    def __sub__(self, other):
        self._check(other)
        if not other.nonzeros:
            return self
        da, db = self.den, other.den
        num = [a * db - b * da for a, b in zip(self.num, other.num)]
        return FieldElement(self.conductor, num, da * db)

    def __neg__(self):
        if not self.nonzeros:
            return self
        return FieldElement(
            self.conductor, tuple(-c for c in self.num), self.den, _normalized=True
        )

    def __mul__(self, other):
        self._check(other)
        ctx = _context(self.conductor)
        d = ctx.degree
        anz, bnz = self.nonzeros, other.nonzeros
        if not anz or not bnz:
            return FieldElement(self.conductor, (0,) * d, 1, _normalized=True)
        prod = [0] * (2 * d - 1)
        maxdeg = 0
        for i, ca in anz:
            for j, cb in bnz:
                prod[i + j] += ca * cb
                if i + j > maxdeg:
                    maxdeg = i + j
        out = prod[:d]
        rows = ctx.rows
        for e in range(maxdeg, d - 1, -1):
            c = prod[e]
            if c:
                row = rows[e - d]
                for t in range(d):
                    if row[t]:
                        out[t] += c * row[t]
        return FieldElement(self.conductor, out, self.den * other.den)

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        phi = [Fraction(c) for c in _context(self.conductor).phi]
        b = list(self.coeffs)
        # extended gcd of b and phi over Q[x]
        r0, r1 = phi, b
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0, t1 = [Fraction(1)], [Fraction(0)]

        def trim(p):
            while len(p) > 1 and p[-1] == 0:
                p.pop()
            return p

        def padd(p, q):
            n = max(len(p), len(q))
            return [
                (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                for i in range(n)
            ]

        def pscale_shift(p, c, k):
            return [Fraction(0)] * k + [c * x for x in p]

        r0, r1 = trim(r0), trim(r1)
        while len(r1) > 1 or r1[0] != 0:
            # divide r0 by r1
            q = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
            rem = list(r0)
            while len(rem) >= len(r1) and (len(rem) > 1 or rem[0] != 0):
                shift = len(rem) - len(r1)
                c = rem[-1] / r1[-1]
                q[shift] += c
                rem = padd(rem, pscale_shift(r1, -c, shift))
                rem = trim(rem)
                if len(rem) < len(r1):
                    break
            r0, r1 = r1, rem
            s0, s1 = s1, trim(padd(s0, [-c for c in _poly_mul_frac(q, s1)]))
            t0, t1 = t1, trim(padd(t0, [-c for c in _poly_mul_frac(q, t1)]))
        # now r0 = gcd = nonzero constant (Phi_N is irreducible over Q)
        g = r0[0]
        assert len(r0) == 1 and g != 0
        inv_coeffs = [c / g for c in s0]
        d = _context(self.conductor).degree
        inv_coeffs += [Fraction(0)] * (d - len(inv_coeffs))
        return FieldElement.from_fractions(self.conductor, inv_coeffs[:d])

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^(N-1)."""
        ctx = _context(self.conductor)
        d, N = ctx.degree, ctx.N
        out = [0] * d
        for k, c in self.nonzeros:
            for t, r in ctx.zeta_powers_nz[(N - k) % N]:
                out[t] += c * r
        return FieldElement(self.conductor, out, self.den)


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else [Fraction(0)]
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


# ---------------------------------------------------------------------------
# Module-level operations

def zeta(conductor, exponent=1):
    """zeta_N^exponent as a FieldElement."""
    ctx = _context(conductor)
    row = ctx.zeta_powers[exponent % conductor]
    return FieldElement(conductor, row, 1)


def field_arith(a, b, op):
    """Dispatch helper: op in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def embed(a, target_conductor):
    """Image of a under zeta_M -> zeta_N^(N/M); requires M | N."""
    M, N = a.conductor, target_conductor
    if N % M != 0:
        raise NotADivisor(f"{M} does not divide {N}")
    if M == N:
        return a
    step = N // M
    ctx = _context(N)
    d = ctx.degree
    out = [0] * d
    for k, c in a.nonzeros:
        for t, r in ctx.zeta_powers_nz[(k * step) % N]:
            out[t] += c * r
    return FieldElement(N, out, a.den)


def sqrt5(conductor):
    """sqrt(5) as the quadratic Gauss sum zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4."""
    if conductor % 5 != 0:
        raise NotADivisor(f"5 does not divide {conductor}")
    s = conductor // 5
    z = lambda e: zeta(conductor, s * e)
    return z(1) - z(2) - z(3) + z(4)


def sqrt2(conductor):
    """sqrt(2) = zeta_8 + zeta_8^-1."""
    if conductor % 8 != 0:
        raise NotADivisor(f"8 does not divide {conductor}")
    s = conductor // 8
    return zeta(conductor, s) + zeta(conductor, 7 * s)


# ---------------------------------------------------------------------------
# Serialization

def field_to_json(a):
    return {
        "conductor": a.conductor,
        "coeffs": [[f.numerator, f.denominator] for f in a.coeffs],
    }


def field_from_json(obj):
    coeffs = [Fraction(int(p), int(q)) for p, q in obj["coeffs"]]
    return FieldElement.from_fractions(int(obj["conductor"]), coeffs)
