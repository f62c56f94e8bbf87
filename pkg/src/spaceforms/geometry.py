"""Floating-point verification layer: contact planes, adjoint covering,
framing identities, and a fixed-point oracle for the exact freeness test.

Coordinates.  A quaternion q = w1 + j*w2 is handled as the complex pair
(w1, w2); points of S^3 get the four real coordinates

    (Re w1, Im w1, Re w2, Im w2)

so the 3-sphere sits in C^2 the way the contact geometry wants it: the Reeb
field V is right multiplication by i,

    V(p) = (-p1, p0, -p3, p2),

and the plane field orthogonal to V is preserved exactly by pairs whose
right component lies in S^1 (complex linear) or j*S^1 (antilinear, V -> -V).
The adjoint computations extract the usual (i, j, k) components instead; the
two readings differ only by the sign of the k-axis and never mix.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateFrame, NotARotation


# ---------------------------------------------------------------------------
# Exact -> float conversion

@lru_cache(maxsize=None)
def _root_powers(conductor, degree):
    ks = np.arange(degree)
    return np.exp(2j * np.pi * ks / conductor)


def field_to_complex(a):
    powers = _root_powers(a.conductor, len(a.num))
    return complex(np.dot(np.asarray(a.num, dtype=float), powers) / a.den)


def pair_of(q):
    """Complex pair (w1, w2) of an exact or already-float quaternion."""
    if isinstance(q, tuple):
        return q
    return (field_to_complex(q.w1), field_to_complex(q.w2))


def qmul(p, q):
    a, b = p
    c, d = q
    return (a * c - b.conjugate() * d, a.conjugate() * d + b * c)


def qconj(p):
    a, b = p
    return (a.conjugate(), -b)


def pair_to_vec(p):
    a, b = p
    return np.array([a.real, a.imag, b.real, b.imag])


def vec_to_pair(v):
    return (complex(v[0], v[1]), complex(v[2], v[3]))


QUAT_ONE = (1 + 0j, 0j)
QUAT_I = (1j, 0j)
QUAT_J = (0j, 1 + 0j)
QUAT_K = (0j, -1j)  # k = i*j in the w2 = y - z*i encoding


def ijk_components(p):
    """(x, y, z) coefficients of i, j, k for the adjoint picture."""
    a, b = p
    return np.array([a.imag, b.real, -b.imag])


# ---------------------------------------------------------------------------
# Points and sampling

@dataclass(frozen=True)
class Point3Sphere:
    coords: tuple

    def __post_init__(self):
        assert abs(sum(c * c for c in self.coords) - 1.0) <= 1e-12

    @classmethod
    def from_array(cls, v):
        v = np.asarray(v, dtype=float)
        n = np.linalg.norm(v)
        if n == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(tuple(v / n))

    @property
    def array(self):
        return np.asarray(self.coords)


def sample_s3(count, seed):
    """Deterministic pseudo-uniform points: normalized 4-d Gaussians."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    vs = rng.standard_normal((count, 4))
    return [Point3Sphere.from_array(v) for v in vs]


def _sample_quaternions(count, seed):
    return [vec_to_pair(p.array) for p in sample_s3(count, seed)]


# ---------------------------------------------------------------------------
# The standard contact structure

_REEB = np.array(
    [[0.0, -1.0, 0.0, 0.0],
     [1.0, 0.0, 0.0, 0.0],
     [0.0, 0.0, 0.0, -1.0],
     [0.0, 0.0, 1.0, 0.0]]
)


def reeb_vector(v):
    """V(p): multiplication of each complex coordinate by i."""
    v = np.asarray(v, dtype=float)
    return np.array([-v[1], v[0], -v[3], v[2]])


@dataclass(frozen=True)
class ContactFrame:
    point: np.ndarray
    v: np.ndarray
    x1: np.ndarray
    x2: np.ndarray


def contact_plane(p):
    """Orthonormal oriented frame (V, X1, X2) with X1, X2 spanning the
    contact plane at p; det[p, V, X1, X2] = +1."""
    p = p.array if isinstance(p, Point3Sphere) else np.asarray(p, dtype=float)
    v = reeb_vector(p)
    basis = [p, v]
    plane = []
    for probe in np.eye(4):
        u = probe.copy()
        for b in basis + plane:
            u -= np.dot(u, b) * b
        n = np.linalg.norm(u)
        if n > 1e-6:
            plane.append(u / n)
        if len(plane) == 2:
            break
    if len(plane) < 2:
        raise DegenerateFrame("could not complete a contact frame")
    x1, x2 = plane
    if np.linalg.det(np.column_stack([p, v, x1, x2])) < 0:
        x2 = -x2
    return ContactFrame(p, v, x1, x2)


def contact_condition(p, step=1e-5):
    """Sign (and margin) of alpha ^ d(alpha) at p via central differences of
    alpha = <V(.), .> along the oriented contact frame; positive everywhere
    for the standard structure."""
    fr = contact_plane(p)

    def alpha(x, u):
        return np.dot(reeb_vector(x), u)

    d12 = (alpha(fr.point + step * fr.x1, fr.x2)
           - alpha(fr.point - step * fr.x1, fr.x2)) / (2 * step)
    d21 = (alpha(fr.point + step * fr.x2, fr.x1)
           - alpha(fr.point - step * fr.x2, fr.x1)) / (2 * step)
    return d12 - d21


# ---------------------------------------------------------------------------
# The SO(4) action in these coordinates

def action_matrix(g):
    """4x4 matrix of x -> l x conj(r) for a SpinPair (exact or float pairs)."""
    if hasattr(g, "left"):
        l, r = pair_of(g.left), pair_of(g.right)
    else:
        l, r = pair_of(g[0]), pair_of(g[1])
    rbar = qconj(r)
    cols = []
    for basis in (QUAT_ONE, QUAT_I, QUAT_J, (0j, 1j)):
        cols.append(pair_to_vec(qmul(qmul(l, basis), rbar)))
    return np.column_stack(cols)


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    worst_defect: float
    witness: Point3Sphere | None

    def to_json(self):
        out = {"invariant": self.invariant, "worst_defect": self.worst_defect}
        if self.witness is not None:
            out["witness"] = list(self.witness.coords)
        return out


def _plane_defects(mat, points):
    """sin of the largest principal angle between the pushed-forward contact
    plane at each point and the contact plane at its image.

    Both planes contain the image point, so the angle is the residual of
    the pushed Reeb vector A V(p) outside span{A p, V(A p)}; this sine-based
    form stays well conditioned near zero (arccos of a singular value is not).
    """
    pts = np.asarray(points, dtype=float)
    imgs = pts @ mat.T
    pushed_v = (pts @ _REEB.T) @ mat.T
    target_v = imgs @ _REEB.T
    resid = (
        pushed_v
        - (pushed_v * imgs).sum(axis=1, keepdims=True) * imgs
        - (pushed_v * target_v).sum(axis=1, keepdims=True) * target_v
    )
    return np.linalg.norm(resid, axis=1)


def invariance_check(g, samples, tol=1e-9):
    """Whether dphi(g) maps the contact plane field to itself at the samples
    (largest principal angle at most tol at every sample)."""
    mat = action_matrix(g)
    pts = np.array([p.array for p in samples])
    defects = _plane_defects(mat, pts)
    worst = int(np.argmax(defects))
    worst_defect = float(defects[worst])
    return InvarianceResult(
        worst_defect <= tol,
        worst_defect,
        samples[worst] if worst_defect > tol else None,
    )


def fixed_point_oracle(g, tol=1e-9):
    """A unit fixed vector of x -> l x conj(r), or None.

    Numeric cross-check for the exact equal-real-part criterion: eigenvalue 1
    of the 4x4 action matrix within tol.
    """
    mat = action_matrix(g)
    vals, vecs = np.linalg.eig(mat)
    for idx in np.argsort(np.abs(vals - 1.0)):
        if abs(vals[idx] - 1.0) <= tol:
            v = np.real(vecs[:, idx])
            n = np.linalg.norm(v)
            if n < 1e-8:
                continue
            v = v / n
            if np.linalg.norm(mat @ v - v) <= 1e-7:
                return Point3Sphere.from_array(v)
    return None


# ---------------------------------------------------------------------------
# Adjoint representation: the 2:1 covering S^3 -> SO(3)

def adjoint_matrix(q):
    """Columns q i qbar, q j qbar, q k qbar in (i, j, k) coordinates."""
    p = pair_of(q) if not isinstance(q, tuple) else q
    pb = qconj(p)
    cols = [ijk_components(qmul(qmul(p, e), pb)) for e in (QUAT_I, QUAT_J, QUAT_K)]
    return np.column_stack(cols)


def adjoint_preimages(rot, tol=1e-9):
    """The two unit quaternions {q, -q} with Ad_q = rot (trace/axis
    reconstruction); certifies the two-sheeted covering."""
    rot = np.asarray(rot, dtype=float)
    if rot.shape != (3, 3) or np.linalg.norm(rot @ rot.T - np.eye(3)) > tol * 10 \
            or abs(np.linalg.det(rot) - 1.0) > tol * 10:
        raise NotARotation("input is not special orthogonal within tolerance")
    t = np.trace(rot)
    # Shepperd-style branch on the largest of trace and diagonal entries
    candidates = [t, rot[0, 0], rot[1, 1], rot[2, 2]]
    case = int(np.argmax(candidates))
    if case == 0:
        w = np.sqrt(1.0 + t) / 2.0
        x = (rot[2, 1] - rot[1, 2]) / (4 * w)
        y = (rot[0, 2] - rot[2, 0]) / (4 * w)
        z = (rot[1, 0] - rot[0, 1]) / (4 * w)
    elif case == 1:
        x = np.sqrt(1.0 + 2 * rot[0, 0] - t) / 2.0
        w = (rot[2, 1] - rot[1, 2]) / (4 * x)
        y = (rot[0, 1] + rot[1, 0]) / (4 * x)
        z = (rot[0, 2] + rot[2, 0]) / (4 * x)
    elif case == 2:
        y = np.sqrt(1.0 + 2 * rot[1, 1] - t) / 2.0
        w = (rot[0, 2] - rot[2, 0]) / (4 * y)
        x = (rot[0, 1] + rot[1, 0]) / (4 * y)
        z = (rot[1, 2] + rot[2, 1]) / (4 * y)
    else:
        z = np.sqrt(1.0 + 2 * rot[2, 2] - t) / 2.0
        w = (rot[1, 0] - rot[0, 1]) / (4 * z)
        x = (rot[0, 2] + rot[2, 0]) / (4 * z)
        y = (rot[1, 2] + rot[2, 1]) / (4 * z)
    v = np.array([w, x, y, z])
    v = v / np.linalg.norm(v)
    q = (complex(v[0], v[1]), complex(v[2], -v[3]))  # w2 = y - z*i
    return q, (-q[0], -q[1])


# ---------------------------------------------------------------------------
# Framing identities

def framing_transition_residual(q):
    """Right frame (iq, jq, kq) against q * Ad_{q^-1}-transported left frame;
    zero up to roundoff, certifying the transition map is the adjoint."""
    p = pair_of(q) if not isinstance(q, tuple) else q
    pb = qconj(p)
    worst = 0.0
    for e in (QUAT_I, QUAT_J, QUAT_K):
        lhs = qmul(e, p)                       # right-invariant frame vector
        rhs = qmul(p, qmul(qmul(pb, e), p))    # q * (q^-1 e q)
        worst = max(worst, np.linalg.norm(pair_to_vec(lhs) - pair_to_vec(rhs)))
    return worst


def conjugation_pullback_residual(q):
    """Differential of q -> qbar applied to the reversed-orientation left
    frame at qbar, against the right-invariant frame (i, j, k) * q."""
    p = pair_of(q) if not isinstance(q, tuple) else q
    pb = qconj(p)
    worst = 0.0
    for e in (QUAT_I, QUAT_J, QUAT_K):
        frame_vec = qmul(pb, e)                # qbar * e: left frame at qbar
        pushed = qconj((-frame_vec[0], -frame_vec[1]))
        target = qmul(e, p)                    # right-invariant frame at q
        worst = max(worst, np.linalg.norm(pair_to_vec(pushed) - pair_to_vec(target)))
    return worst


def framing_transition_check(samples, seed=42, tol=1e-10):
    qs = _sample_quaternions(samples, seed)
    worst = max(framing_transition_residual(q) for q in qs)
    return worst <= tol, worst


def conjugation_pullback_check(samples, seed=42, tol=1e-10):
    qs = _sample_quaternions(samples, seed)
    worst = max(conjugation_pullback_residual(q) for q in qs)
    return worst <= tol, worst
