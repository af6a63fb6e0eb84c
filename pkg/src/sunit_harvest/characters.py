"""Dirichlet characters to squarefree moduli, and the inequality checks built on them.

Representation: a squarefree modulus a = p_1 * ... * p_k has cyclic unit groups
mod each p_j, so a character is a tuple of exponents e_j in [0, p_j - 2] against
fixed primitive roots g_j (smallest per prime).  Values are complex floats:

    chi(x) = exp(2 pi i * sum_j e_j * log_j(x mod p_j) / (p_j - 1)),

zero when gcd(x, a) > 1.  Characters are indexed by their exponent tuple in
lexicographic order (e_1 most significant), so index 0 is principal.

Only squarefree moduli are supported: that is what makes cond(chi) equal to
the product of the primes where chi is twisted, and |tau(chi)|^2 = cond(chi).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .arith import trial_factor, multiplicative_functions
from .errors import DomainError, ResourceLimit
from .smooth import SmoothSet
from .stepping import count_hits

_TWO_PI = 2.0 * np.pi


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = [q for q, _ in trial_factor(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise DomainError(f"no primitive root mod {p}")  # unreachable for prime p


def _squarefree_primes(a: int) -> tuple[int, ...]:
    if a < 2:
        raise DomainError("modulus must be >= 2")
    fac = trial_factor(a)
    if any(e > 1 for _, e in fac):
        raise DomainError(f"modulus {a} is not squarefree")
    return tuple(p for p, _ in fac)


@dataclass(frozen=True)
class DirichletCharacter:
    """One character mod a squarefree modulus, represented componentwise."""

    modulus: int
    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    # per-prime discrete-log tables to the fixed primitive roots, log[0] unused
    generator_logs: tuple[tuple[int, ...], ...]

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def conductor(self) -> int:
        c = 1
        for p, e in zip(self.primes, self.exponents):
            if e:
                c *= p
        return c

    def value(self, n: int) -> complex:
        if gcd(n, self.modulus) != 1:
            return 0.0 + 0.0j
        phase = 0.0
        for p, e, logs in zip(self.primes, self.exponents, self.generator_logs):
            if e:
                phase += e * logs[n % p] / (p - 1)
        return complex(np.exp(1j * _TWO_PI * phase))


class CharacterTable:
    """All phi(a) characters mod a squarefree a, with cached log tables."""

    def __init__(self, a: int):
        self.modulus = a
        self.primes = _squarefree_primes(a)
        self.roots = tuple(_primitive_root(p) for p in self.primes)
        logs = []
        for p, g in zip(self.primes, self.roots):
            t = [0] * p
            acc = 1
            for e in range(p - 1):
                t[acc] = e
                acc = acc * g % p
            logs.append(tuple(t))
        self.generator_logs = tuple(logs)
        self.orders = tuple(p - 1 for p in self.primes)
        self.phi = 1
        for n in self.orders:
            self.phi *= n
        self._value_matrix: np.ndarray | None = None

    def __len__(self) -> int:
        return self.phi

    def character(self, index: int) -> DirichletCharacter:
        if not 0 <= index < self.phi:
            raise DomainError(f"character index {index} out of range")
        exps = []
        rem = index
        for n in reversed(self.orders):
            exps.append(rem % n)
            rem //= n
        return DirichletCharacter(
            self.modulus, self.primes, tuple(reversed(exps)), self.generator_logs
        )

    def characters(self) -> list[DirichletCharacter]:
        return [self.character(i) for i in range(self.phi)]

    def index_of(self, exponents: Sequence[int]) -> int:
        idx = 0
        for e, n in zip(exponents, self.orders):
            idx = idx * n + e
        return idx

    def value_matrix(self) -> np.ndarray:
        """Complex [phi, a] array V with V[i, x] = chi_i(x); rows in index order."""
        if self._value_matrix is not None:
            return self._value_matrix
        a = self.modulus
        k = len(self.primes)
        # per-prime phase contribution of each residue x
        phase = np.zeros((k, a))
        coprime = np.ones(a, dtype=bool)
        x = np.arange(a)
        for j, (p, logs) in enumerate(zip(self.primes, self.generator_logs)):
            r = x % p
            coprime &= r != 0
            phase[j] = np.asarray(logs, dtype=float)[r] / (p - 1)
        # exponent tuples in index order
        grids = np.meshgrid(*[np.arange(n) for n in self.orders], indexing="ij")
        E = np.stack([g.reshape(-1) for g in grids], axis=1).astype(float)  # [phi, k]
        V = np.exp(1j * _TWO_PI * (E @ phase))
        V[:, ~coprime] = 0.0
        self._value_matrix = V
        return V

    def sums_over_counts(self, counts_by_residue: np.ndarray) -> np.ndarray:
        """F[i] = sum_x counts[x] * chi_i(x) for every character at once.

        Scatters the coprime residues onto the unit-group grid and takes a
        multidimensional inverse DFT, which matches the chi orientation above.
        Residues with gcd > 1 are ignored (chi is zero there).
        """
        tensor = np.zeros(self.orders, dtype=complex)
        a = self.modulus
        for x in range(a):
            c = counts_by_residue[x]
            if not c:
                continue
            if gcd(x, a) != 1:
                continue
            pos = tuple(logs[x % p] for p, logs in zip(self.primes, self.generator_logs))
            tensor[pos] += c
        return np.fft.ifftn(tensor).reshape(-1) * self.phi


def all_characters(a: int) -> CharacterTable:
    """The full dual group mod squarefree a; DomainError otherwise."""
    return CharacterTable(a)


def char_sum(chi: DirichletCharacter, values: Sequence[int]) -> complex:
    """Plain sum of chi over a list of integers."""
    return sum((chi.value(v) for v in values), 0.0 + 0.0j)


def gauss_sum_and_conductor(chi: DirichletCharacter) -> tuple[complex, int]:
    """(tau(chi), cond(chi)); for squarefree moduli |tau|^2 == cond."""
    a = chi.modulus
    tau = sum(
        chi.value(x) * np.exp(1j * _TWO_PI * x / a) for x in range(1, a) if gcd(x, a) == 1
    )
    return complex(tau), chi.conductor


def _interval_counts(a: int, W: int) -> np.ndarray:
    """counts[r] = #{1 <= w <= W : w == r (mod a)}."""
    counts = np.zeros(a)
    if W <= 0:
        return counts
    full, rem = divmod(W, a)
    counts += full
    if rem:
        counts[1 : rem + 1] += 1
    return counts


@dataclass(frozen=True)
class PolyaVinogradovReport:
    q: int
    scan_M: int
    scan_N: int
    max_ratio: float
    argmax_character: int
    argmax_M: int
    argmax_N: int
    argmax_abs_sum: float
    argmax_bound: float
    rows: tuple[tuple[int, float, float, float], ...]  # (char index, max |sum|, bound, ratio)

    @property
    def passes(self) -> bool:
        return self.max_ratio <= 1.0


def polya_vinogradov_check(q: int, scan_M: int, scan_N: int) -> PolyaVinogradovReport:
    """Scan every non-principal chi mod q and every window (M, N) in range.

    Ratio recorded is  |sum_{n=M+1}^{M+N} chi(n)|  /  (d(q/r) sqrt(r) log r)
    with r the conductor of chi; the check passes iff the max ratio is <= 1.
    """
    if q < 3:
        raise DomainError("need q >= 3")
    table = all_characters(q)
    V = table.value_matrix()
    L = scan_M + scan_N
    reps = L // q + 2
    Ms = np.arange(scan_M)
    Ns = np.arange(1, scan_N + 1)
    idx = Ms[:, None] + Ns[None, :]
    rows = []
    best = (-1.0, 0, 0, 0, 0.0, 0.0)
    for i in range(1, table.phi):
        chi = table.character(i)
        r = chi.conductor
        _, _, d_qr = multiplicative_functions(q // r)
        bound = d_qr * np.sqrt(r) * np.log(r)
        vals = np.tile(V[i], reps)[1 : L + 1]
        P = np.concatenate([[0.0 + 0.0j], np.cumsum(vals)])
        diffs = np.abs(P[idx] - P[Ms[:, None]])  # |P[M+N] - P[M]|
        m_flat = int(np.argmax(diffs))
        mi, ni = divmod(m_flat, scan_N)
        max_abs = float(diffs[mi, ni])
        ratio = max_abs / bound
        rows.append((i, max_abs, float(bound), float(ratio)))
        if ratio > best[0]:
            best = (ratio, i, int(Ms[mi]), int(Ns[ni]), max_abs, float(bound))
    return PolyaVinogradovReport(
        q, scan_M, scan_N, best[0], best[1], best[2], best[3], best[4], best[5], tuple(rows)
    )


def large_sieve_check(
    Q_set: Sequence[int], Y: int, Z: int, a_n: Sequence[complex]
) -> tuple[float, float, bool]:
    """Gauss-sum-weighted character-average bound with the explicit constant 7.

    lhs = sum_q (1/phi(q)) sum_chi |tau(chi)|^2 |sum_{Y<n<=Z} a_n chi(n)|^2
    rhs = 7 * max d(q) * max{Z - Y, (max q)^2} * sum d(n) |a_n|^2
    """
    if Y >= Z:
        raise DomainError("need Y < Z")
    if len(a_n) != Z - Y:
        raise DomainError("a_n must be indexed by n in (Y, Z]")
    lhs = 0.0
    for q in Q_set:
        table = all_characters(q)  # DomainError on non-squarefree q
        V = table.value_matrix()
        folded = np.zeros(q, dtype=complex)
        for ofs, coeff in enumerate(a_n):
            folded[(Y + 1 + ofs) % q] += coeff
        sums = V @ folded
        evec = np.exp(1j * _TWO_PI * np.arange(q) / q)
        taus = V @ evec
        lhs += float(np.sum(np.abs(taus) ** 2 * np.abs(sums) ** 2)) / table.phi
    max_d = max(multiplicative_functions(q)[2] for q in Q_set)
    max_q = max(Q_set)
    weight = sum(
        multiplicative_functions(Y + 1 + ofs)[2] * abs(coeff) ** 2
        for ofs, coeff in enumerate(a_n)
    )
    rhs = 7.0 * max_d * max(Z - Y, max_q**2) * weight
    return lhs, rhs, lhs <= rhs + 1e-9


def fourth_moment_ratio(q: int, N: int) -> float:
    """[(1/phi(q)) sum_{chi != chi0} |sum_{n<=N} chi(n)|^4] / N^2; report-only."""
    if q < 3:
        raise DomainError("need q >= 3")
    if N < 1:
        raise DomainError("need N >= 1")
    table = all_characters(q)
    V = table.value_matrix()
    counts = _interval_counts(q, N)
    sums = V @ counts.astype(complex)
    fourth = float(np.sum(np.abs(sums[1:]) ** 4))
    return fourth / table.phi / N**2


def primitive_decomposition_check(
    a: int, chi_star: DirichletCharacter, W: int
) -> tuple[complex, complex, bool]:
    """Sieve the coprimality condition out of an incomplete character sum.

    With chi mod a induced by a primitive chi* mod y (y | a):
        sum_{w<=W} chi(w)  ==  sum_{d|a} mu(d) sum_{v<=W/d} chi*(v d)
    Both sides are evaluated termwise; equal within 1e-9 absolute.
    """
    y = chi_star.modulus
    if a % y:
        raise DomainError(f"conductor modulus {y} does not divide {a}")
    if chi_star.conductor != y:
        raise DomainError("chi_star must be primitive (twisted at every prime)")
    primes_a = _squarefree_primes(a)
    lhs = sum(
        (chi_star.value(w) for w in range(1, W + 1) if gcd(w, a) == 1), 0.0 + 0.0j
    )
    rhs = 0.0 + 0.0j
    for mask in range(1 << len(primes_a)):
        d, mu = 1, 1
        for j, p in enumerate(primes_a):
            if mask >> j & 1:
                d *= p
                mu = -mu
        rhs += mu * sum((chi_star.value(v * d) for v in range(1, W // d + 1)), 0.0 + 0.0j)
    return complex(lhs), complex(rhs), abs(lhs - rhs) <= 1e-9


def multiplicative_decomposition(
    A: SmoothSet, C: SmoothSet, W: int, table_cap: int = 2_000_000
) -> tuple[float, float, int]:
    """Split the count of {(a, c, w <= W) : c w == 1 (mod a)} into main + remainder.

    main is the principal-character term sum_a #{c coprime} #{w coprime} / phi(a);
    remainder collects every non-principal character product.  The exact count
    comes independently from the residue-stepping enumerator, and
    main + remainder == exact_count up to floating error.
    """
    a_values = A.values()
    c_values = C.values()
    for m in A.members:
        if not m.squarefree or m.value < 2:
            raise DomainError(f"modulus {m.value} must be squarefree and >= 2")
    main = 0.0
    remainder = 0.0 + 0.0j
    for a in a_values:
        if a > table_cap:
            raise ResourceLimit(f"modulus {a} beyond table cap {table_cap}")
        table = all_characters(a)
        c_counts = np.zeros(a)
        for c in c_values:
            c_counts[c % a] += 1
        Fc = table.sums_over_counts(c_counts)
        Fw = table.sums_over_counts(_interval_counts(a, W))
        prod = Fc * Fw / table.phi
        main += prod[0].real
        remainder += np.sum(prod[1:])
    exact = count_hits(a_values, c_values, W, shift=1)
    return main, float(remainder.real), exact
