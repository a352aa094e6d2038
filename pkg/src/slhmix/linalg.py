"""Dense linear-algebra helpers.

Vectorization is row-major throughout: ``vect(Y) = Y.reshape(-1)`` so that
``vect(X Y Z) = (X kron Z^T) vect(Y)``.  All superoperators in this package
are matrices acting on row-major vectorized operators.
"""

from __future__ import annotations

import itertools

import numpy as np

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)


def vect(x: np.ndarray) -> np.ndarray:
    return np.asarray(x).reshape(-1)


def unvect(v: np.ndarray, dim: int | None = None) -> np.ndarray:
    v = np.asarray(v)
    if dim is None:
        dim = int(round(np.sqrt(v.size)))
    return v.reshape(dim, dim)


def dagger(x: np.ndarray) -> np.ndarray:
    return x.conj().T


def kron_chain(mats) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def pauli_string_matrix(labels) -> np.ndarray:
    """Tensor product of single-qubit Paulis for a label tuple in {0..3}^n."""
    return kron_chain(PAULIS[l] for l in labels)


def embed_operator(op: np.ndarray, sites, dims) -> np.ndarray:
    """Embed ``op`` acting on the listed tensor slots of a product space.

    ``dims`` is the per-slot dimension tuple of the full space; ``op`` acts on
    the slots in ``sites`` (in that order) and as identity elsewhere.
    """
    dims = tuple(int(d) for d in dims)
    sites = list(sites)
    n = len(dims)
    d_sites = int(np.prod([dims[s] for s in sites]))
    if op.shape != (d_sites, d_sites):
        raise ValueError(f"operator shape {op.shape} does not match sites {sites}")
    rest = [s for s in range(n) if s not in sites]
    d_rest = int(np.prod([dims[s] for s in rest])) if rest else 1
    full = np.kron(op, np.eye(d_rest, dtype=complex))
    # current slot order is sites + rest; permute back to 0..n-1
    order = sites + rest
    perm = [order.index(s) for s in range(n)]
    tensor = full.reshape([dims[s] for s in order] * 2)
    tensor = tensor.transpose(perm + [n + p for p in perm])
    d_total = int(np.prod(dims))
    return np.ascontiguousarray(tensor.reshape(d_total, d_total))


def partial_trace(rho: np.ndarray, dims, keep) -> np.ndarray:
    """Trace out all slots not in ``keep`` (kept slots stay in their order)."""
    dims = tuple(int(d) for d in dims)
    keep = sorted(keep)
    n = len(dims)
    traced = [s for s in range(n) if s not in keep]
    tensor = rho.reshape(dims * 2)
    letters = [chr(ord("a") + i) for i in range(n)] + [chr(ord("A") + i) for i in range(n)]
    for s in traced:
        letters[n + s] = letters[s]
    out_letters = [letters[s] for s in keep] + [letters[n + s] for s in keep]
    spec = "".join(letters) + "->" + "".join(out_letters)
    out = np.einsum(spec, tensor)
    d_keep = int(np.prod([dims[s] for s in keep])) if keep else 1
    return out.reshape(d_keep, d_keep)


def expm_hermitian_generator(g: np.ndarray, t: float) -> np.ndarray:
    """exp(t*g) for Hermitian g via eigendecomposition."""
    w, v = np.linalg.eigh(g)
    return (v * np.exp(t * w)) @ v.conj().T


def unitary_from_antihermitian(theta: np.ndarray, t: float = 1.0) -> np.ndarray:
    """exp(t*theta) for anti-Hermitian theta, exact up to eigh accuracy."""
    h = 1j * theta
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def frobenius_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x))


def operator_norm(x: np.ndarray, *, dense_guard: int = 1 << 14,
                  tol: float = 1e-9, max_iter: int = 10_000) -> float:
    """Largest singular value; dense SVD below the guard, power iteration above."""
    x = np.asarray(x)
    if max(x.shape) <= dense_guard:
        return float(np.linalg.svd(x, compute_uv=False)[0])
    rng = np.random.default_rng(0)
    v = rng.standard_normal(x.shape[1]) + 1j * rng.standard_normal(x.shape[1])
    v /= np.linalg.norm(v)
    s_old = 0.0
    for _ in range(max_iter):
        w = x @ v
        v = x.conj().T @ w
        nv = np.linalg.norm(v)
        if nv == 0:
            return 0.0
        v /= nv
        s = np.sqrt(nv)
        if abs(s - s_old) <= tol * max(s, 1.0):
            return float(s)
        s_old = s
    return float(s_old)


def trace_norm_hermitian(x: np.ndarray, *, hermiticity_tol: float = 1e-9) -> float:
    """Trace norm of a (numerically) Hermitian matrix."""
    dev = np.abs(x - x.conj().T).max()
    if dev > hermiticity_tol:
        raise ValueError(f"matrix not Hermitian (deviation {dev:.2e})")
    h = (x + x.conj().T) / 2
    return float(np.abs(np.linalg.eigvalsh(h)).sum())


def principal_angles(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Principal angles between the column spans of a and b (orthonormalized)."""
    qa, _ = np.linalg.qr(a)
    qb, _ = np.linalg.qr(b)
    s = np.linalg.svd(qa.conj().T @ qb, compute_uv=False)
    return np.arccos(np.clip(s, -1.0, 1.0))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR with phase correction."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (z + z.conj().T) / 2


def permutation_operator(perm, k: int, dim: int) -> np.ndarray:
    """Operator on (C^dim)^{ated k} permuting tensor slots: slot i -> perm[i]."""
    size = dim**k
    p = np.zeros((size, size), dtype=complex)
    for idx in itertools.product(range(dim), repeat=k):
        src = 0
        for i in idx:
            src = src * dim + i
        out = [0] * k
        for i, pos in enumerate(perm):
            out[pos] = idx[i]
        dst = 0
        for i in out:
            dst = dst * dim + i
        p[dst, src] = 1.0
    return p


def eigenvalue_clusters(values, tol: float = 1e-8):
    """Cluster a sorted 1D array of reals into (mean, multiplicity) groups."""
    vals = np.sort(np.asarray(values, dtype=float))
    groups = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > tol:
            chunk = vals[start:i]
            groups.append((float(chunk.mean()), len(chunk)))
            start = i
    return groups
