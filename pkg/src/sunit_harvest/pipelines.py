"""The three harvest pipelines.

Each pipeline enumerates near-solutions of a linear equation whose
coefficients run over squarefree smooth sets, tallies them into buckets keyed
by the small free variables, fixes the most popular bucket, and then adjoins
the primes of that bucket's key to the base prime set so that every hit in the
bucket becomes an actual solution of the target equation:

    thm1   a*u + 1     = c*w      ->  A + 1 = C        (A, C) = (a*u, c*w)
    thm2   a*u + b + 1 = c*w      ->  A + B + 1 = C    (A, B, C) = (a*u, b, c*w)
    prop1  a1*z1 + a2*z2 + a3*z3 = 0  ->  a + b = c    after gcd reduction

Hits are enumerated by residue stepping (w walks an arithmetic progression mod
a), which is what makes the desk scale feasible.  Enumeration may fan out over
worker threads; partial tallies merge in sorted modulus order so reports are
identical for every schedule.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil, gcd, log2, sqrt
from typing import Callable, Iterable, Sequence

from .arith import PrimeSet, factor_over, prime_support
from .errors import (
    ConfigError,
    DomainError,
    DuplicateProducts,
    EmptyHarvest,
    ResourceLimit,
)
from .exponents import regime_exponents
from .report import compare_bounds
from .siegel import siegel_nonzero_coords
from .smooth import enumerate_squarefree_smooth

DEFAULT_SEED = 20240601


@dataclass
class SolutionBucket:
    """Tally cell keyed by the free variables of one near-solution family."""

    key: tuple
    hits: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.hits)


@dataclass
class HarvestReport:
    equation: str
    s_prime: tuple[int, ...]
    s_full: tuple[int, ...]
    popular_key: tuple
    solutions: tuple
    solution_rows: tuple  # per kept solution, with originating variables
    bucket_stats: dict
    set_sizes: dict
    audits: dict
    bound_comparison: dict
    s_bound: dict | None = None
    config_echo: dict | None = None

    def as_dict(self) -> dict:
        return {
            "equation": self.equation,
            "s_prime": list(self.s_prime),
            "s_full": list(self.s_full),
            "popular_key": list(self.popular_key),
            "solutions": [list(t) for t in self.solutions],
            "solution_rows": [list(r) for r in self.solution_rows],
            "bucket_stats": self.bucket_stats,
            "set_sizes": self.set_sizes,
            "audits": self.audits,
            "bound_comparison": self.bound_comparison,
            "s_bound": self.s_bound,
            "config_echo": self.config_echo,
        }


@dataclass
class HarvestConfig:
    """Scales, prime sets and caps for one pipeline run.

    Prime intervals at paper scale are degenerate on a desk, so the prime sets
    are given explicitly while Z, W (and Y, Q, R) are derived from X through
    the regime exponent formulas (see `config_from_exponents`).
    """

    equation: str
    t1: PrimeSet
    t2: PrimeSet
    t3: PrimeSet
    x: int
    delta: float
    w_max: int
    z: float
    q: float | None = None
    r: float | None = None
    y: float | None = None
    alpha: float | None = None
    variant: str | None = None
    epsilon: float = 0.01
    enum_cap: int = 2_000_000
    hit_cap: int = 50_000_000
    threads: int = 1
    seed: int = DEFAULT_SEED

    def validate(self):
        if self.equation not in ("thm1", "thm2", "prop1"):
            raise ConfigError("equation", f"unknown equation {self.equation!r}")
        for name, a, b in (("t1/t2", self.t1, self.t2), ("t1/t3", self.t1, self.t3), ("t2/t3", self.t2, self.t3)):
            if not a.is_disjoint(b):
                raise ConfigError(name, "prime sets must be pairwise disjoint")
        if not 0 < self.delta < 1:
            raise ConfigError("delta", "need 0 < delta < 1")
        if self.equation == "thm1":
            if self.w_max > min(self.x, self.z):
                raise ConfigError("w", "need W <= min(X, Z)")
            if not (self.x ** (1 / 100) <= self.z <= self.x**100):
                raise ConfigError("z", "need X^(1/100) <= Z <= X^100")
            if self.q is None or self.r is None:
                raise ConfigError("q", "thm1 needs the Q, R factorization scales")
            if abs(self.q * self.r - self.x) > 1e-6 * self.x:
                raise ConfigError("q", "need Q * R = X")
        if self.equation == "thm2":
            if self.y is None:
                raise ConfigError("y", "thm2 needs the Y scale")
            if self.z > min(self.x, self.y):
                raise ConfigError("z", "need Z <= min(X, Y)")
            if self.y > self.x * self.w_max * (1 + 1e-9):
                raise ConfigError("y", "need Y <= X * W")

    def echo(self) -> dict:
        return {
            "equation": self.equation,
            "t1": list(self.t1.primes),
            "t2": list(self.t2.primes),
            "t3": list(self.t3.primes),
            "x": self.x,
            "delta": self.delta,
            "w": self.w_max,
            "z": self.z,
            "q": self.q,
            "r": self.r,
            "y": self.y,
            "alpha": self.alpha,
            "variant": self.variant,
            "epsilon": self.epsilon,
            "seed": self.seed,
        }


def config_from_exponents(
    equation: str,
    x: int,
    alpha: float,
    variant: str,
    delta: float,
    t1: PrimeSet,
    t2: PrimeSet,
    t3: PrimeSet,
    **kwargs,
) -> HarvestConfig:
    """Instantiate concrete scales from the regime exponent formulas."""
    theorem = "thm1" if equation == "thm1" else "thm2"
    exps = regime_exponents(theorem, variant, alpha)
    z = float(x) ** exps.z_exp
    w = max(1, int(float(x) ** exps.w_exp))
    q = r = y = None
    if equation == "thm1":
        q = z ** (1 - delta)
        r = x / q
    else:
        y = float(x) ** exps.y_exp
        # exponent arithmetic gives Y = X * W exactly; rounding W down keeps Y <= X*W
        y = min(y, float(x) * w)
    cfg = HarvestConfig(
        equation=equation,
        t1=t1,
        t2=t2,
        t3=t3,
        x=x,
        delta=delta,
        w_max=w,
        z=z,
        q=q,
        r=r,
        y=y,
        alpha=alpha,
        variant=variant,
        **kwargs,
    )
    cfg.validate()
    return cfg


def _range(scale: float, delta: float) -> tuple[int, int]:
    """Integer window [scale^(1-delta), scale]."""
    return max(2, ceil(scale ** (1 - delta))), int(scale)


def popular_bucket(buckets: Iterable[SolutionBucket] | dict) -> SolutionBucket:
    """The bucket of maximal count; ties go to the lexicographically smallest key."""
    if isinstance(buckets, dict):
        buckets = buckets.values()
    best = None
    total = 0
    nonempty = 0
    for b in buckets:
        if b.count == 0:
            continue
        nonempty += 1
        total += b.count
        if best is None or (-b.count, b.key) < (-best.count, best.key):
            best = b
    if best is None:
        raise EmptyHarvest("no nonempty bucket")
    assert best.count >= ceil(total / nonempty)  # pigeonhole, cannot fail
    return best


def verify_sunit_solution(tup: Sequence[int], equation: str, S: PrimeSet) -> bool:
    """Equation holds exactly and every component factors over S (|1| admitted)."""

    def smooth_ok(v: int) -> bool:
        v = abs(v)
        if v == 0:
            return False
        if v == 1:
            return True
        return factor_over(v, S) is not None

    if equation == "thm1":
        if len(tup) != 2:
            return False
        A, C = tup
        return A + 1 == C and smooth_ok(A) and smooth_ok(C)
    if equation == "thm2":
        if len(tup) != 3:
            return False
        A, B, C = tup
        return A + B + 1 == C and all(smooth_ok(v) for v in tup)
    if equation == "prop1":
        if len(tup) != 3:
            return False
        a, b, c = tup
        return a + b == c and a >= 1 and b >= 1 and all(smooth_ok(v) for v in tup)
    raise DomainError(f"unknown equation {equation!r}")


def _parallel_over(
    items: Sequence, worker: Callable, threads: int
) -> list:
    """Apply worker to each item, possibly on a pool; results in item order."""
    if threads <= 1 or len(items) <= 1:
        return [worker(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, items))


def _tally(hit_stream: Iterable[tuple]) -> dict[tuple, SolutionBucket]:
    buckets: dict[tuple, SolutionBucket] = {}
    for key, payload in hit_stream:
        b = buckets.get(key)
        if b is None:
            b = buckets[key] = SolutionBucket(key)
        b.hits.append(payload)
    return buckets


def _bucket_stats(buckets: dict[tuple, SolutionBucket]) -> dict:
    total = sum(b.count for b in buckets.values())
    nonempty = sum(1 for b in buckets.values() if b.count)
    return {
        "total_hits": total,
        "nonempty_buckets": nonempty,
        "max_load": max((b.count for b in buckets.values()), default=0),
        "pigeonhole_floor": ceil(total / nonempty) if nonempty else 0,
    }


def thm1_harvest(
    a_values: Sequence[int],
    c_values: Sequence[int],
    W: int,
    s_prime: PrimeSet,
    *,
    x: float | None = None,
    z: float | None = None,
    delta: float | None = None,
    epsilon: float = 0.01,
    threads: int = 1,
    set_sizes: dict | None = None,
    config_echo: dict | None = None,
) -> HarvestReport:
    """Core A + 1 = C harvest over explicit coefficient sets."""
    a_values = sorted(a_values)
    c_values = sorted(c_values)
    gcd_skips = 0

    def walk(a: int) -> tuple[list, int]:
        hits, skips = [], 0
        for c in c_values:
            if gcd(c, a) != 1:
                skips += 1
                continue
            w = pow(c, -1, a)  # in [1, a-1]
            while w <= W:
                u = (c * w - 1) // a
                hits.append(((u, w), (a, c)))
                w += a
        return hits, skips

    merged: list[tuple] = []
    for hits, skips in _parallel_over(a_values, walk, threads):
        merged.extend(hits)
        gcd_skips += skips

    buckets = _tally(merged)
    stats = _bucket_stats(buckets)
    popular = popular_bucket(buckets)  # EmptyHarvest when nothing stepped
    u, w = popular.key

    S = s_prime.union(PrimeSet(prime_support(u * w)))

    seen = set()
    solutions, rows = [], []
    verify_failures = 0
    for a, c in popular.hits:
        A, C = a * u, c * w
        if (A, C) in seen:
            continue
        seen.add((A, C))
        if not verify_sunit_solution((A, C), "thm1", S):
            verify_failures += 1
            continue
        solutions.append((A, C))
        rows.append((A, C, a, c, u, w))
    solutions.sort()
    rows.sort()

    s = len(S)
    s_bound = None
    if x is not None and z is not None and delta is not None:
        additive_cap = len(s_prime) + log2(W) + log2(x * W / z ** (1 - delta))
        s_bound = {
            "s_prime": len(s_prime),
            "s": s,
            "additive_cap": additive_cap,
            "holds": s <= additive_cap,
        }
    return HarvestReport(
        equation="thm1",
        s_prime=s_prime.primes,
        s_full=S.primes,
        popular_key=popular.key,
        solutions=tuple(solutions),
        solution_rows=tuple(rows),
        bucket_stats=stats,
        set_sizes=set_sizes or {"A": len(a_values), "C": len(c_values)},
        audits={"gcd_skips": gcd_skips, "verify_failures": verify_failures},
        bound_comparison=compare_bounds(s, "thm1", epsilon, len(solutions)),
        s_bound=s_bound,
        config_echo=config_echo,
    )


def thm1_run(config: HarvestConfig) -> HarvestReport:
    """Harvest solutions of A + 1 = C from near-solutions of a*u + 1 = c*w."""
    config.validate()
    if config.equation != "thm1":
        raise ConfigError("equation", "config is not a thm1 config")
    q_lo, q_hi = _range(config.q, config.delta)
    r_lo, r_hi = _range(config.r, config.delta)
    a_lo, a_hi = _range(config.z, config.delta)
    q_set = enumerate_squarefree_smooth(config.t1, q_lo, q_hi, config.enum_cap)
    r_set = enumerate_squarefree_smooth(config.t2, r_lo, r_hi, config.enum_cap)
    a_set = enumerate_squarefree_smooth(config.t3, a_lo, a_hi, config.enum_cap)

    products: dict[int, tuple[int, int]] = {}
    for qv in q_set.values():
        for rv in r_set.values():
            c = qv * rv
            if c in products:
                raise DuplicateProducts(f"product {c} arises twice")
            products[c] = (qv, rv)
    c_values = sorted(products)
    a_values = [m.value for m in a_set.members]

    if len(a_values) * len(c_values) > config.hit_cap:
        raise ResourceLimit("a x c pair count beyond hit cap")

    return thm1_harvest(
        a_values,
        c_values,
        config.w_max,
        config.t1.union(config.t2).union(config.t3),
        x=config.x,
        z=config.z,
        delta=config.delta,
        epsilon=config.epsilon,
        threads=config.threads,
        set_sizes={
            "Q": len(q_set),
            "R": len(r_set),
            "A": len(a_set),
            "C": len(c_values),
        },
        config_echo=config.echo(),
    )


def thm2_harvest(
    a_values: Sequence[int],
    b_values: Sequence[int],
    c_values: Sequence[int],
    W: int,
    s_prime: PrimeSet,
    *,
    x: float | None = None,
    y: float | None = None,
    z: float | None = None,
    delta: float | None = None,
    epsilon: float = 0.01,
    threads: int = 1,
    config_echo: dict | None = None,
) -> HarvestReport:
    """Core A + B + 1 = C harvest over explicit coefficient sets.

    u = 0 hits are discarded (they would not tie distinct moduli to distinct
    A values); the per-modulus count of b with gcd(b+1, a) = 1 is recorded as
    an audit statistic rather than used as a filter.
    """
    a_values = sorted(a_values)
    b_values = sorted(b_values)
    c_values = sorted(c_values)

    def walk(a: int) -> tuple[list, int, int, int]:
        hits, skips, u0, coprime_b = [], 0, 0, 0
        for b in b_values:
            if gcd(b + 1, a) == 1:
                coprime_b += 1
        for c in c_values:
            if gcd(c, a) != 1:
                skips += 1
                continue
            cinv = pow(c, -1, a)
            for b in b_values:
                w = (b + 1) * cinv % a
                if w == 0:
                    w = a
                while w <= W:
                    u = (c * w - b - 1) // a
                    if u == 0:
                        u0 += 1
                    else:
                        hits.append(((u, w), (a, b, c)))
                    w += a
        return hits, skips, u0, coprime_b

    merged: list[tuple] = []
    gcd_skips = u0_discards = 0
    coprime_b_counts = []
    for hits, skips, u0, cb in _parallel_over(a_values, walk, threads):
        merged.extend(hits)
        gcd_skips += skips
        u0_discards += u0
        coprime_b_counts.append(cb)

    buckets = _tally(merged)
    stats = _bucket_stats(buckets)
    popular = popular_bucket(buckets)
    u, w = popular.key

    S = s_prime.union(PrimeSet(prime_support(abs(u) * w)))

    seen = set()
    solutions, rows = [], []
    degenerate = verify_failures = 0
    for a, b, c in popular.hits:
        A, B, C = a * u, b, c * w
        if A == -1 or B == -1 or C == 1:
            degenerate += 1
            continue
        if (A, B, C) in seen:
            continue
        seen.add((A, B, C))
        if not verify_sunit_solution((A, B, C), "thm2", S):
            verify_failures += 1
            continue
        solutions.append((A, B, C))
        rows.append((A, B, C, a, b, c, u, w))
    solutions.sort()
    rows.sort()

    audits = {
        "gcd_skips": gcd_skips,
        "u_zero_discards": u0_discards,
        "degenerate_filtered": degenerate,
        "verify_failures": verify_failures,
        "coprime_b_min_fraction": (
            min(cb / len(b_values) for cb in coprime_b_counts)
            if b_values and coprime_b_counts
            else 1.0
        ),
        "u_range_observed": [
            min((k[0] for k in buckets), default=0),
            max((k[0] for k in buckets), default=0),
        ],
        # large multiplicities here would already be solutions in disguise,
        # so the maxima feed the error-term side of the report
        "pair_collision_b": list(pair_collision_stats(b_values, "difference"))
        if len(b_values) ** 2 <= 4_000_000
        else None,
        "pair_collision_c": list(pair_collision_stats(c_values, "difference"))
        if len(c_values) ** 2 <= 4_000_000
        else None,
    }
    if x is not None and y is not None and z is not None and delta is not None:
        audits["u_range_theoretical"] = [
            -y / z ** (1 - delta),
            x * W / z ** (1 - delta),
        ]
    return HarvestReport(
        equation="thm2",
        s_prime=s_prime.primes,
        s_full=S.primes,
        popular_key=popular.key,
        solutions=tuple(solutions),
        solution_rows=tuple(rows),
        bucket_stats=stats,
        set_sizes={"A": len(a_values), "B": len(b_values), "C": len(c_values)},
        audits=audits,
        bound_comparison=compare_bounds(len(S), "thm2", epsilon, len(solutions)),
        config_echo=config_echo,
    )


def thm2_run(config: HarvestConfig) -> HarvestReport:
    """Harvest solutions of A + B + 1 = C from near-solutions of a*u + b + 1 = c*w."""
    config.validate()
    if config.equation != "thm2":
        raise ConfigError("equation", "config is not a thm2 config")
    c_lo, c_hi = _range(config.x, config.delta)
    b_lo, b_hi = _range(config.y, config.delta)
    a_lo, a_hi = _range(config.z, config.delta)
    c_set = enumerate_squarefree_smooth(config.t1, c_lo, c_hi, config.enum_cap)
    b_set = enumerate_squarefree_smooth(config.t2, b_lo, b_hi, config.enum_cap)
    a_set = enumerate_squarefree_smooth(config.t3, a_lo, a_hi, config.enum_cap)
    c_values = [m.value for m in c_set.members]
    b_values = [m.value for m in b_set.members]
    a_values = [m.value for m in a_set.members]

    if len(a_values) * len(c_values) * len(b_values) > config.hit_cap:
        raise ResourceLimit("a x c x b triple count beyond hit cap")

    return thm2_harvest(
        a_values,
        b_values,
        c_values,
        config.w_max,
        config.t1.union(config.t2).union(config.t3),
        x=config.x,
        y=config.y,
        z=config.z,
        delta=config.delta,
        epsilon=config.epsilon,
        threads=config.threads,
        config_echo=config.echo(),
    )


def prop1_run(
    x: int,
    T1: PrimeSet,
    T2: PrimeSet,
    T3: PrimeSet,
    enum_cap: int = 2_000_000,
    triple_cap: int = 2_000_000,
    threads: int = 1,
    epsilon: float = 0.01,
) -> HarvestReport:
    """Harvest coprime triples a + b = c from small kernel vectors of linear forms.

    For each coefficient triple over the three smooth sets, a small all-nonzero
    kernel vector bounded by sqrt(3x) is selected deterministically; triples
    are bucketed by that vector, the popular vector is fixed, and its hits are
    reduced by their gcd to coprime solutions.
    """
    for name, s1, s2 in (("T1/T2", T1, T2), ("T1/T3", T1, T3), ("T2/T3", T2, T3)):
        if not s1.is_disjoint(s2):
            raise ConfigError(name, "prime sets must be pairwise disjoint")
    sets = [
        enumerate_squarefree_smooth(t, 2, x, enum_cap).values() for t in (T1, T2, T3)
    ]
    n_triples = len(sets[0]) * len(sets[1]) * len(sets[2])
    if n_triples > triple_cap:
        raise ResourceLimit(f"{n_triples} coefficient triples beyond cap {triple_cap}")
    cap = sqrt(3.0 * x)

    def scan(a1: int) -> tuple[list, int]:
        hits, skipped = [], 0
        for a2 in sets[1]:
            for a3 in sets[2]:
                sol = siegel_nonzero_coords((a1, a2, a3), x, cap)
                if sol is None:
                    skipped += 1
                    continue
                hits.append((sol.z, (a1, a2, a3)))
        return hits, skipped

    merged: list[tuple] = []
    skipped_triples = 0
    for hits, skipped in _parallel_over(list(sets[0]), scan, threads):
        merged.extend(hits)
        skipped_triples += skipped

    buckets = _tally(merged)
    stats = _bucket_stats(buckets)
    popular = popular_bucket(buckets)
    z1, z2, z3 = popular.key

    s_prime = T1.union(T2).union(T3)
    S = s_prime.union(PrimeSet(prime_support(abs(z1 * z2 * z3))))

    reduced = []
    for a1, a2, a3 in popular.hits:
        t = (a1 * z1, a2 * z2, a3 * z3)
        g = gcd(gcd(abs(t[0]), abs(t[1])), abs(t[2]))
        reduced.append((tuple(v // g for v in t), (a1, a2, a3)))

    seen = set()
    duplicates = verify_failures = 0
    solutions, rows = [], []
    for t, alphas in reduced:
        pos = sorted(v for v in t if v > 0)
        neg = sorted(-v for v in t if v < 0)
        if len(neg) == 1:
            a, b = pos
            c = neg[0]
        else:
            a, b = neg
            c = pos[0]
        if (a, b, c) in seen:
            duplicates += 1
            continue
        seen.add((a, b, c))
        if not verify_sunit_solution((a, b, c), "prop1", S) or gcd(a, b) != 1:
            verify_failures += 1
            continue
        solutions.append((a, b, c))
        rows.append((a, b, c) + alphas + popular.key)
    solutions.sort()
    rows.sort()

    return HarvestReport(
        equation="prop1",
        s_prime=s_prime.primes,
        s_full=S.primes,
        popular_key=popular.key,
        solutions=tuple(solutions),
        solution_rows=tuple(rows),
        bucket_stats=stats,
        set_sizes={"A1": len(sets[0]), "A2": len(sets[1]), "A3": len(sets[2])},
        audits={
            "skipped_triples": skipped_triples,
            "skip_rate": skipped_triples / n_triples if n_triples else 0.0,
            "reduced_duplicates": duplicates,
            "verify_failures": verify_failures,
        },
        bound_comparison=compare_bounds(len(S), "prop1", epsilon, len(solutions)),
    )


def pair_collision_stats(
    values: Sequence[int], mode: str, cap: int = 100_000_000
) -> tuple[int, int]:
    """Max over n != 0 of the pair-collision multiplicity, with a witness n.

    mode 'difference' counts ordered pairs with c - c' = n; 'product_difference'
    counts ordered quadruples with c*c' - c''*c''' = n.  Counts at n and -n
    agree by symmetry, so the witness is the smallest positive arg-max (0 when
    no pair exists).
    """
    vals = sorted(values)
    m = len(vals)
    if mode == "difference":
        if m * m > cap:
            raise ResourceLimit("pair count beyond cap")
        tally: dict[int, int] = {}
        for i, c in enumerate(vals):
            for cp in vals[:i]:
                n = c - cp
                if n:
                    tally[n] = tally.get(n, 0) + 1
    elif mode == "product_difference":
        prods: dict[int, int] = {}
        for c in vals:
            for cp in vals:
                p = c * cp
                prods[p] = prods.get(p, 0) + 1
        if len(prods) ** 2 > cap:
            raise ResourceLimit("product-pair count beyond cap")
        tally = {}
        keys = sorted(prods)
        for i, p in enumerate(keys):
            for pp in keys[:i]:
                n = p - pp
                tally[n] = tally.get(n, 0) + prods[p] * prods[pp]
    else:
        raise DomainError(f"unknown mode {mode!r}")
    if not tally:
        return 0, 0
    best = max(tally.items(), key=lambda kv: (kv[1], -kv[0]))
    return best[1], best[0]
