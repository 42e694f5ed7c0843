"""Distance-to-span engine for the fractional-part basis.

Measures how well the constant sequence is approximated by finite linear
combinations of the fractional-part sequences with denominators up to a
cutoff L. The squared distance d2(L) is computed by two independent routes:

  * LeastSquares: solve the normal equations G c = g by Cholesky
    factorization and report 1 - g.c;
  * GramDetRatio: the ratio of the bordered Gram determinant (basis plus
    the constant sequence) to the plain one, via factorization
    log-determinants.

Gram entries come from the closed form in seqspace and are memoized in a
GramStore, which persists to a small binary format (see GramStore.save)
and exports CSV. A Moebius-weighted approximant residual and a sweep
driver with the asymptotic diagnostic d2 * log L round out the module.

The sequence with denominator 1 is identically zero; bases that include it
produce a singular Gram matrix, so solvers prune exactly-zero columns (and
any exactly-duplicated ones) before factorizing, and the report records
what was pruned.
"""

from __future__ import annotations

import enum
import math
import struct
import threading
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, get_lapack_funcs

from .arith import MoebiusTable, lcm, sieve_moebius
from .errors import CacheError, ConditioningError, DomainError
from .seqspace import (
    DEFAULT_WEIGHT,
    FractionalSequence,
    InnerProductResult,
    WeightScheme,
    inner_product_closed,
    inner_product_truncated,
)
from .specfun import digamma

# Key 0 in a GramStore denotes the constant sequence; positive keys are
# fractional-part denominators.
CONSTANT_KEY = 0

RIDGE_LADDER = (0.0, 1e-14, 1e-12, 1e-10)


def asymptotic_rate_constant() -> float:
    """The conjectured value of lim d2(L) * log L: 2 + (Euler gamma) - log(4 pi).

    Reported alongside sweep diagnostics, never asserted.
    """
    return 2.0 - digamma(1.0) - math.log(4.0 * math.pi)


# ---------------------------------------------------------------------------
# basis selection


class BasisKind(enum.Enum):
    ALL = "all"
    EXCLUDE_ONE = "exclude-one"
    SQUARE_FREE = "square-free"


@dataclass(frozen=True)
class BasisSelection:
    kind: BasisKind = BasisKind.EXCLUDE_ONE

    @classmethod
    def parse(cls, token: str) -> "BasisSelection":
        for kind in BasisKind:
            if kind.value == token:
                return cls(kind)
        raise DomainError(f"unknown basis kind {token!r}")

    def denominators(self, L: int) -> tuple[int, ...]:
        if L < 1:
            raise DomainError(f"cutoff must be >= 1, got {L}")
        if self.kind is BasisKind.ALL:
            return tuple(range(1, L + 1))
        if self.kind is BasisKind.EXCLUDE_ONE:
            return tuple(range(2, L + 1))
        table = sieve_moebius(L)
        return tuple(l for l in range(1, L + 1) if table.squarefree[l])


# ---------------------------------------------------------------------------
# Gram store and binary cache

_MAGIC = b"NBBG"
_FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIIQ")
_RECORD = struct.Struct("<QQddB")
_TRAILER = struct.Struct("<I")
_METHOD_CODES = {"closed": 0, "truncated": 1}
_METHOD_NAMES = {code: name for name, code in _METHOD_CODES.items()}


class GramStore:
    """Memo table of pairwise inner products, keyed (i, j) with i <= j.

    Thread-safe for concurrent fills; values are pure functions of their
    keys, so racing writers are benign. Persists as a little-endian binary
    file: header {magic "NBBG", version u32, weight-id u32, count u64},
    records {i u64, j u64, value f64, error_bound f64, method u8} sorted by
    key, and a CRC32 trailer over everything before it.
    """

    def __init__(self, weight_id: int = 0):
        self.weight_id = weight_id
        self._entries: dict[tuple[int, int], InnerProductResult] = {}
        self._lock = threading.Lock()

    @staticmethod
    def _key(i: int, j: int) -> tuple[int, int]:
        if i < 0 or j < 0:
            raise DomainError(f"store keys must be nonnegative, got ({i}, {j})")
        return (i, j) if i <= j else (j, i)

    def get(self, i: int, j: int) -> Optional[InnerProductResult]:
        with self._lock:
            return self._entries.get(self._key(i, j))

    def put(self, i: int, j: int, result: InnerProductResult) -> None:
        with self._lock:
            self._entries[self._key(i, j)] = result

    def ensure(
        self, i: int, j: int, compute: Callable[[int, int], InnerProductResult]
    ) -> InnerProductResult:
        key = self._key(i, j)
        with self._lock:
            hit = self._entries.get(key)
        if hit is not None:
            return hit
        result = compute(*key)
        with self._lock:
            return self._entries.setdefault(key, result)

    def __contains__(self, key: tuple[int, int]) -> bool:
        with self._lock:
            return self._key(*key) in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def items_sorted(self) -> list[tuple[tuple[int, int], InnerProductResult]]:
        with self._lock:
            return sorted(self._entries.items())

    # -- persistence --------------------------------------------------------

    def save(self, path) -> None:
        items = self.items_sorted()
        blob = bytearray(_HEADER.pack(_MAGIC, _FORMAT_VERSION, self.weight_id, len(items)))
        for (i, j), r in items:
            blob += _RECORD.pack(i, j, r.value, r.error_bound, _METHOD_CODES[r.method])
        blob += _TRAILER.pack(zlib.crc32(bytes(blob)))
        Path(path).write_bytes(bytes(blob))

    @classmethod
    def load(cls, path) -> "GramStore":
        blob = Path(path).read_bytes()
        if len(blob) < _HEADER.size + _TRAILER.size:
            raise CacheError(f"cache file {path} is truncated")
        magic, version, weight_id, count = _HEADER.unpack_from(blob, 0)
        if magic != _MAGIC:
            raise CacheError(f"cache file {path} has wrong magic {magic!r}")
        if version != _FORMAT_VERSION:
            raise CacheError(
                f"cache file {path} has format version {version}, expected {_FORMAT_VERSION}"
            )
        body_end = _HEADER.size + count * _RECORD.size
        if len(blob) != body_end + _TRAILER.size:
            raise CacheError(f"cache file {path} has inconsistent length")
        (crc_stored,) = _TRAILER.unpack_from(blob, body_end)
        if crc_stored != zlib.crc32(blob[:body_end]):
            raise CacheError(f"cache file {path} failed its checksum")
        store = cls(weight_id=weight_id)
        for k in range(count):
            i, j, value, bound, code = _RECORD.unpack_from(blob, _HEADER.size + k * _RECORD.size)
            if code not in _METHOD_NAMES:
                raise CacheError(f"cache file {path} has unknown method code {code}")
            store._entries[(i, j)] = InnerProductResult(
                value=value, method=_METHOD_NAMES[code], error_bound=bound
            )
        return store

    def export_csv(self, path) -> None:
        lines = ["l,m,value,error_bound,method"]
        for (i, j), r in self.items_sorted():
            lines.append(f"{i},{j},{r.value!r},{r.error_bound!r},{r.method}")
        Path(path).write_text("\n".join(lines) + "\n")


def _sequence_for(key: int) -> FractionalSequence:
    if key == CONSTANT_KEY:
        return FractionalSequence.constant()
    return FractionalSequence.of(key)


def _pair_cost(i: int, j: int) -> int:
    a, b = max(i, 1), max(j, 1)
    return lcm(a, b)


def _make_entry_fn(
    n_trunc: Optional[int], weight: WeightScheme
) -> Callable[[int, int], InnerProductResult]:
    def compute(i: int, j: int) -> InnerProductResult:
        a, b = _sequence_for(i), _sequence_for(j)
        if n_trunc is None:
            return inner_product_closed(a, b, weight=weight)
        return inner_product_truncated(a, b, n_trunc, weight=weight)

    return compute


def assemble_gram(
    L: int,
    basis: BasisSelection = BasisSelection(),
    store: Optional[GramStore] = None,
    threads: int = 1,
    n_trunc: Optional[int] = None,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> GramStore:
    """Fill `store` with every basis pair (i <= j) for the given cutoff.

    Pairs already present are not recomputed. The fill may run on several
    threads; each entry depends only on its own key, so the result is
    independent of the schedule. Pairs are ordered by lcm so consecutive
    computations share the cached residue-class weights.
    """
    if L < 1:
        raise DomainError(f"cutoff must be >= 1, got {L}")
    if store is None:
        store = GramStore(weight_id=weight.weight_id)
    if store.weight_id != weight.weight_id:
        raise CacheError(
            f"store holds weight id {store.weight_id}, asked to fill with {weight.weight_id}"
        )
    denoms = basis.denominators(L)
    compute = _make_entry_fn(n_trunc, weight)
    todo = [
        (denoms[p], denoms[q])
        for p in range(len(denoms))
        for q in range(p, len(denoms))
        if (denoms[p], denoms[q]) not in store
    ]
    todo.sort(key=lambda ij: _pair_cost(*ij))
    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda ij: store.ensure(ij[0], ij[1], compute), todo))
    else:
        for i, j in todo:
            store.ensure(i, j, compute)
    return store


def gram_system(
    L: int,
    basis: BasisSelection = BasisSelection(),
    store: Optional[GramStore] = None,
    threads: int = 1,
    n_trunc: Optional[int] = None,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> tuple[tuple[int, ...], np.ndarray, np.ndarray]:
    """Return (denominators, G, g): the Gram matrix of the basis and the
    cross inner products with the constant sequence."""
    store = assemble_gram(L, basis, store, threads=threads, n_trunc=n_trunc, weight=weight)
    denoms = basis.denominators(L)
    compute = _make_entry_fn(n_trunc, weight)
    k = len(denoms)
    G = np.empty((k, k))
    g = np.empty(k)
    for p, l in enumerate(denoms):
        g[p] = store.ensure(CONSTANT_KEY, l, compute).value
        for q in range(p, k):
            G[p, q] = G[q, p] = store.ensure(l, denoms[q], compute).value
    return denoms, G, g


# ---------------------------------------------------------------------------
# distance reports


class SolveMethod(enum.Enum):
    LEAST_SQUARES = "ls"
    GRAM_DET_RATIO = "det"

    @classmethod
    def parse(cls, token: str) -> "SolveMethod":
        for m in cls:
            if m.value == token:
                return m
        raise DomainError(f"unknown solve method {token!r}")


@dataclass(frozen=True)
class DistanceReport:
    L: int
    basis: BasisSelection
    d2: float
    method: SolveMethod
    cond_estimate: float
    ridge_used: float
    a_est: float
    degenerate: bool = False
    pruned: tuple[int, ...] = ()
    error: Optional[str] = None

    def csv_row(self) -> str:
        method = "degenerate" if self.degenerate else self.method.value
        return (
            f"{self.L},{self.basis.kind.value},{self.d2!r},{self.a_est!r},"
            f"{self.cond_estimate!r},{self.ridge_used!r},{method}"
        )

    def to_json_dict(self) -> dict:
        return {
            "L": self.L,
            "basis": self.basis.kind.value,
            "d2": self.d2,
            "a_est": self.a_est,
            "cond": self.cond_estimate,
            "ridge": self.ridge_used,
            "method": self.method.value,
            "degenerate": self.degenerate,
            "pruned": list(self.pruned),
            "error": self.error,
        }


def _prune(denoms: Sequence[int], G: np.ndarray, g: np.ndarray):
    """Drop exactly-zero columns (zero diagonal) and exact duplicates."""
    keep: list[int] = []
    dropped: list[int] = []
    seen_rows: dict[bytes, int] = {}
    for p, l in enumerate(denoms):
        if G[p, p] == 0.0:
            dropped.append(l)
            continue
        fingerprint = G[p].tobytes() + g[p : p + 1].tobytes()
        if fingerprint in seen_rows:
            dropped.append(l)
            continue
        seen_rows[fingerprint] = p
        keep.append(p)
    idx = np.asarray(keep, dtype=np.intp)
    return idx, tuple(dropped)


def _cond_estimate(cho, anorm: float) -> float:
    c, lower = cho
    pocon = get_lapack_funcs(("pocon",), (c,))[0]
    rcond, info = pocon(c, anorm, uplo="L" if lower else "U")
    if info != 0 or rcond <= 0.0:
        return math.inf
    return 1.0 / rcond


def _factor_with_ridge(G: np.ndarray):
    """Cholesky-factor G, climbing the ridge ladder on failure.

    Returns (factor, ridge_used, cond_estimate). The ridge is added to the
    diagonal unscaled; the ladder tops out at 1e-10, far below any Gram
    diagonal here.
    """
    anorm = float(np.linalg.norm(G, 1)) if G.size else 0.0
    last_exc: Optional[Exception] = None
    for ridge in RIDGE_LADDER:
        try:
            M = G if ridge == 0.0 else G + ridge * np.eye(G.shape[0])
            cho = cho_factor(M, lower=False, check_finite=False)
        except LinAlgError as exc:
            last_exc = exc
            continue
        return cho, ridge, _cond_estimate(cho, anorm)
    raise ConditioningError(
        f"Gram factorization failed at every ridge in {RIDGE_LADDER}: {last_exc}",
        cond_estimate=math.inf,
    )


def _logdet_from_factor(cho) -> float:
    c, _ = cho
    return 2.0 * float(np.sum(np.log(np.diag(c))))


def distance(
    L: int,
    basis: BasisSelection = BasisSelection(),
    method: SolveMethod = SolveMethod.LEAST_SQUARES,
    store: Optional[GramStore] = None,
    threads: int = 1,
    n_trunc: Optional[int] = None,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> DistanceReport:
    """Squared distance from the constant sequence to the span at cutoff L.

    For L = 1 (or a basis that prunes to nothing) the span is {0}, the
    distance is the squared norm of the constant sequence, exactly 1; the
    report is flagged degenerate and no solver runs.
    """
    if L < 1:
        raise DomainError(f"cutoff must be >= 1, got {L}")
    denoms, G, g = gram_system(L, basis, store, threads=threads, n_trunc=n_trunc, weight=weight)
    idx, dropped = _prune(denoms, G, g)
    if idx.size == 0:
        return DistanceReport(
            L=L, basis=basis, d2=1.0, method=method, cond_estimate=math.nan,
            ridge_used=0.0, a_est=1.0 * math.log(L), degenerate=True, pruned=dropped,
        )
    Gp = G[np.ix_(idx, idx)]
    gp = g[idx]
    cho, ridge, cond = _factor_with_ridge(Gp)
    if method is SolveMethod.LEAST_SQUARES:
        c = cho_solve(cho, gp, check_finite=False)
        d2 = 1.0 - float(gp @ c)
    else:
        k = idx.size
        bordered = np.empty((k + 1, k + 1))
        bordered[:k, :k] = Gp
        bordered[:k, k] = bordered[k, :k] = gp
        bordered[k, k] = 1.0
        if ridge:
            bordered[np.diag_indices(k)] += ridge
        cho_b, ridge_b, _ = _factor_with_ridge(bordered)
        ridge = max(ridge, ridge_b)
        d2 = math.exp(_logdet_from_factor(cho_b) - _logdet_from_factor(cho))
    return DistanceReport(
        L=L, basis=basis, d2=d2, method=method, cond_estimate=cond,
        ridge_used=ridge, a_est=d2 * math.log(L), pruned=dropped,
    )


def distance_sweep(
    L_values: Sequence[int],
    basis: BasisSelection = BasisSelection(),
    method: SolveMethod = SolveMethod.LEAST_SQUARES,
    store: Optional[GramStore] = None,
    threads: int = 1,
    n_trunc: Optional[int] = None,
    weight: WeightScheme = DEFAULT_WEIGHT,
) -> list[DistanceReport]:
    """Distance reports over ascending cutoffs, sharing one Gram store.

    Solver failures do not abort the sweep; the failing row carries the
    error message and a NaN distance.
    """
    if list(L_values) != sorted(L_values):
        raise DomainError("sweep cutoffs must be sorted ascending")
    if not L_values:
        return []
    if store is None:
        store = GramStore(weight_id=weight.weight_id)
    # One assembly at the largest cutoff covers every row.
    assemble_gram(max(L_values), basis, store, threads=threads, n_trunc=n_trunc, weight=weight)
    reports = []
    for L in L_values:
        try:
            reports.append(
                distance(L, basis, method, store, threads=threads, n_trunc=n_trunc, weight=weight)
            )
        except ConditioningError as exc:
            reports.append(
                DistanceReport(
                    L=L, basis=basis, d2=math.nan, method=method,
                    cond_estimate=exc.cond_estimate, ridge_used=RIDGE_LADDER[-1],
                    a_est=math.nan, error=str(exc),
                )
            )
    return reports


# ---------------------------------------------------------------------------
# Moebius-weighted approximant


def moebius_residual(
    L: int,
    eps: float,
    table: MoebiusTable,
    store: Optional[GramStore] = None,
    threads: int = 1,
) -> float:
    """Squared error of the Moebius-smoothed combination at cutoff L.

    The approximant is v = -sum_{l<=L} mu(l) l^{-eps} (fractional sequence l);
    the sign makes v approach the constant sequence from the floor-sum
    recurrence. Expanded exactly over Gram entries:

        |gamma - v|^2 = 1 + 2 sum_l mu(l) l^{-eps} <gamma, gamma_l>
                          + sum_{l,m} mu(l) mu(m) (l m)^{-eps} <gamma_l, gamma_m>.

    Always at least the projection distance at the same cutoff.
    """
    if L < 1:
        raise DomainError(f"cutoff must be >= 1, got {L}")
    if eps < 0:
        raise DomainError(f"eps must be >= 0, got {eps}")
    if L > table.limit:
        raise DomainError(f"cutoff {L} exceeds sieve limit {table.limit}")
    # l = 1 contributes the zero sequence; mu(l) = 0 terms vanish.
    denoms = tuple(l for l in range(2, L + 1) if table.mu[l] != 0)
    if not denoms:
        return 1.0
    if store is None:
        store = GramStore()
    compute = _make_entry_fn(None, DEFAULT_WEIGHT)
    assemble_gram(L, BasisSelection(BasisKind.SQUARE_FREE), store, threads=threads)
    k = len(denoms)
    coeff = np.array([float(table.mu[l]) * l ** (-eps) for l in denoms])
    g = np.array([store.ensure(CONSTANT_KEY, l, compute).value for l in denoms])
    G = np.empty((k, k))
    for p in range(k):
        for q in range(p, k):
            G[p, q] = G[q, p] = store.ensure(denoms[p], denoms[q], compute).value
    return 1.0 + 2.0 * float(coeff @ g) + float(coeff @ G @ coeff)
