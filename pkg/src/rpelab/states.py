"""State and measurement constructors.

Isotropic two-qudit states, maximally entangled states, Schmidt-form
measurement vectors, the pair/Fourier vectors, the generalized Bell basis,
and the two named rank-one projective measurement ensembles.

All kets are unit-norm NumPy vectors on the d^2-dimensional bipartite
space, big-endian index ``i*d + j`` for basis label |ij>.
"""

from dataclasses import dataclass, field

import numpy as np

SUM_TOL = 1e-12
COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class IsoParams:
    """Dimension and fidelity of an isotropic state, with the derived
    mixture coefficients a = (1-F)/(d^2-1) and b = (d^2 F - 1)/(d^2 - 1),
    which satisfy d^2 a + b = 1."""

    d: int
    F: float

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or self.d < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.d}")
        if not 0.0 <= self.F <= 1.0:
            raise ValueError(f"fidelity must lie in [0, 1], got {self.F}")

    @property
    def a(self):
        return (1.0 - self.F) / (self.d**2 - 1)

    @property
    def b(self):
        return (self.d**2 * self.F - 1.0) / (self.d**2 - 1)


@dataclass(frozen=True)
class SchmidtVector:
    """Descending nonnegative weights summing to 1; R counts the strictly
    positive entries, and everything past index R-1 must be exactly zero."""

    lambdas: tuple = field()

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lam)
        if not lam:
            raise ValueError("empty Schmidt vector")
        if any(x < 0.0 for x in lam):
            raise ValueError("Schmidt weights must be nonnegative")
        if any(lam[i] < lam[i + 1] - SUM_TOL for i in range(len(lam) - 1)):
            raise ValueError("Schmidt weights must be nonincreasing")
        if abs(sum(lam) - 1.0) > SUM_TOL:
            raise ValueError(f"Schmidt weights must sum to 1, got {sum(lam)}")
        r = self.R
        if any(x != 0.0 for x in lam[r:]):
            raise ValueError("zero weights must be exact and trailing")

    @property
    def R(self):
        """Effective Schmidt rank."""
        return sum(1 for x in self.lambdas if x > 0.0)

    @classmethod
    def uniform(cls, r, pad_to=None):
        """Uniform weight 1/r on the first r entries, zeros after."""
        n = pad_to if pad_to is not None else r
        if r < 1 or r > n:
            raise ValueError(f"rank {r} out of range for length {n}")
        return cls((1.0 / r,) * r + (0.0,) * (n - r))

    def padded(self, d):
        """Weights as a length-d float array (trailing zeros added)."""
        if self.R > d:
            raise ValueError(f"Schmidt rank {self.R} exceeds dimension {d}")
        out = np.zeros(d)
        out[: len(self.lambdas[:d])] = self.lambdas[:d]
        return out


@dataclass(frozen=True)
class MeasurementEnsemble:
    """d^2 unit vectors on the bipartite space whose rank-one projectors
    sum to the identity."""

    d: int
    vectors: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "vectors",
            tuple(np.asarray(v, dtype=np.complex128) for v in self.vectors),
        )

    def completeness_defect(self):
        """Max entrywise deviation of the projector sum from the identity."""
        dim = self.d**2
        acc = np.zeros((dim, dim), dtype=np.complex128)
        for v in self.vectors:
            acc += np.outer(v, v.conj())
        return float(np.abs(acc - np.eye(dim)).max())

    def is_complete(self, tol=COMPLETENESS_TOL):
        return len(self.vectors) == self.d**2 and self.completeness_defect() <= tol


def max_entangled(d):
    """The maximally entangled ket with amplitude 1/sqrt(d) on each |jj>."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    v = np.zeros(d * d, dtype=np.complex128)
    v[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return v


def isotropic(p):
    """Isotropic density matrix F*Phi_d + (1-F)/(d^2-1)*(I - Phi_d)."""
    phi = max_entangled(p.d)
    proj = np.outer(phi, phi.conj())
    return p.F * proj + p.a * (np.eye(p.d**2) - proj)


def schmidt_state(lam, d):
    """The Schmidt-form ket sum_j sqrt(lambda_j) |jj> on the d^2 space."""
    w = lam.padded(d)
    v = np.zeros(d * d, dtype=np.complex128)
    v[np.arange(d) * (d + 1)] = np.sqrt(w)
    return v


def pair_state(k, l, sign, d):
    """(|kl> + sign*|lk>)/sqrt(2) with 0 <= k < l <= d-1."""
    if not 0 <= k < l <= d - 1:
        raise ValueError(f"need 0 <= k < l <= d-1, got k={k}, l={l}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    v = np.zeros(d * d, dtype=np.complex128)
    v[k * d + l] = 1.0 / np.sqrt(2)
    v[l * d + k] = sign / np.sqrt(2)
    return v


def fourier_diag_state(s, d):
    """Normalized (1/sqrt(d)) sum_j omega_d^(s*j) |jj>."""
    if not 0 <= s <= d - 1:
        raise ValueError(f"phase index {s} out of range for d={d}")
    j = np.arange(d)
    v = np.zeros(d * d, dtype=np.complex128)
    v[j * (d + 1)] = np.exp(2j * np.pi * s * j / d) / np.sqrt(d)
    return v


def gen_bell(s, t, d):
    """Generalized Bell ket (I x X^s Z^t)|phi_d>.

    Weyl-Heisenberg convention: X|j> = |j+1 mod d>, Z|j> = omega_d^j |j>.
    """
    if not (0 <= s <= d - 1 and 0 <= t <= d - 1):
        raise ValueError(f"indices (s={s}, t={t}) out of range for d={d}")
    j = np.arange(d)
    v = np.zeros(d * d, dtype=np.complex128)
    v[j * d + (j + s) % d] = np.exp(2j * np.pi * t * j / d) / np.sqrt(d)
    return v


def bell_measurement(d):
    """The d^2 generalized Bell projectors as a measurement ensemble."""
    vecs = [gen_bell(s, t, d) for s in range(d) for t in range(d)]
    return MeasurementEnsemble(d, tuple(vecs))


def mixed_measurement(d):
    """The pair/Fourier ensemble: all psi_kl^(+-) plus all phi_d^s.

    d(d-1) pair states and d Fourier-diagonal states, d^2 operators total.
    """
    vecs = []
    for k in range(d):
        for l in range(k + 1, d):
            vecs.append(pair_state(k, l, +1, d))
            vecs.append(pair_state(k, l, -1, d))
    for s in range(d):
        vecs.append(fourier_diag_state(s, d))
    return MeasurementEnsemble(d, tuple(vecs))


def schmidt_spectrum(vec, d):
    """Schmidt weights of a bipartite ket, descending, tiny values zeroed."""
    c = np.asarray(vec, dtype=np.complex128).reshape(d, d)
    lam = np.sort(np.linalg.svd(c, compute_uv=False) ** 2)[::-1]
    lam[lam < SUM_TOL] = 0.0
    lam /= lam.sum()
    return SchmidtVector(tuple(lam))
