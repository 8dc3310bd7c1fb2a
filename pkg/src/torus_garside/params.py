"""Integer bookkeeping for the torus-knot monoids M(n, m).

Everything here is plain integer arithmetic on the Euclidean division
``m = q*n + r``: the reindexing ``k_i = i*r mod n`` (representative in 1..n),
the per-index defects, the bad-index counts ``B(i, j)`` and the pair defects
``D(i, j)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class TorusParams:
    n: int
    m: int
    q: int
    r: int
    k: tuple[int, ...]
    defects: tuple[int, ...]

    def idx(self, i: int) -> int:
        """Reduce an arbitrary integer index into 1..n (the only modular step)."""
        return (i - 1) % self.n + 1

    def k_of(self, i: int) -> int:
        return self.k[self.idx(i) - 1]

    def D(self, i: int) -> int:
        """Defect of index ``i``; ``i`` is read modulo n."""
        return self.defects[self.idx(i) - 1]

    def B(self, i: int, j: int) -> int:
        return bad_count(self, i, j)

    def Dij(self, i: int, j: int) -> int:
        return defect_pair(self, i, j)

    @property
    def delta_exponent(self) -> int:
        return self.m

    def to_dict(self) -> dict:
        n = self.n
        return {
            "n": n,
            "m": self.m,
            "q": self.q,
            "r": self.r,
            "k": list(self.k),
            "D": list(self.defects),
            "B": {
                f"{i},{j}": bad_count(self, i, j)
                for i in range(1, n + 1)
                for j in range(i, n + 1)
            },
        }


def compute_params(n: int, m: int) -> TorusParams:
    if n < 2:
        raise ValueError(f"n must be at least 2 (got {n})")
    if m <= n:
        raise ValueError(f"m must exceed n (got n={n}, m={m}); swap explicitly if intended")
    if gcd(n, m) != 1:
        raise ValueError(f"n={n} and m={m} are not coprime")
    q, r = divmod(m, n)
    k = tuple((i * r - 1) % n + 1 for i in range(1, n + 1))
    defects = tuple(1 if k[i] + r > n else 0 for i in range(n))
    return TorusParams(n=n, m=m, q=q, r=r, k=k, defects=defects)


def bad_count(p: TorusParams, i: int, j: int) -> int:
    """Number of bad indices among ``i, i+1, ..., i+n-j-1`` (read mod n)."""
    if not 1 <= i <= j <= p.n:
        raise IndexError(f"B({i},{j}) needs 1 <= i <= j <= n={p.n}")
    return sum(p.D(ell) for ell in range(i, i + p.n - j))


def defect_pair(p: TorusParams, i: int, j: int) -> int:
    num = p.n + p.k_of(i) - p.k_of(j) - p.k_of(i + p.n - j)
    value, rem = divmod(num, p.n)
    if rem:
        raise ArithmeticError(f"D({i},{j}) is not an integer: {num}/{p.n}")
    return value


def coprime_pairs(n_max: int = 6, m_max: int = 13, n_min: int = 2) -> list[tuple[int, int]]:
    return [
        (n, m)
        for n in range(n_min, n_max + 1)
        for m in range(n + 1, m_max + 1)
        if gcd(n, m) == 1
    ]


def verify_defect_identities(p: TorusParams) -> dict:
    """Exhaustively test the six defect identities plus basic table invariants.

    Returns ``{"checked": {name: count}, "violations": [...]}``.
    """
    n, D, Dij = p.n, p.D, p.Dij
    violations: list[str] = []
    checked: dict[str, int] = {}

    def record(name: str, ok: bool, detail: str) -> None:
        checked[name] = checked.get(name, 0) + 1
        if not ok:
            violations.append(f"{name}: {detail}")

    record("k-permutation", sorted(p.k) == list(range(1, n + 1)), f"k={p.k}")
    record("sum-defects", sum(p.defects) == p.r, f"sum={sum(p.defects)} r={p.r}")
    record("D(n-1)=0,D(n)=1", D(n - 1) == 0 and D(n) == 1, f"D={p.defects}")
    record("k-endpoints", (p.k[0], p.k[-2], p.k[-1]) == (p.r, n - p.r, n), f"k={p.k}")

    for i in range(1, n + 1):
        record("D(i,i+1)=D(i)", Dij(i, i + 1) == D(i), f"i={i}")
        record("D(i,i)=0", Dij(i, i) == 0, f"i={i}")
    for i, j in itertools.product(range(-n, 2 * n + 1), repeat=2):
        record("D(i,j) in {0,1}", Dij(i, j) in (0, 1), f"i={i} j={j}")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            record(
                "D(i,j)=B(i,j)-B(j,j)",
                Dij(i, j) == p.B(i, j) - p.B(j, j),
                f"i={i} j={j}",
            )
            for kk in range(j, n + 1):
                record(
                    "B-additivity",
                    p.B(i, i + n - j) + p.B(j, j + n - kk) == p.B(i, i + n - kk),
                    f"i={i} j={j} k={kk}",
                )

    for i in range(1, n):
        for j in range(i + 1, n):
            if D(i) != D(j):
                record("ft(1)", Dij(i + 1, j + 1) == D(j), f"i={i} j={j}")
            record(
                "ft(3)",
                Dij(i + 2, j + 1) + D(i + 1) == Dij(i + 1, j) + D(j),
                f"i={i} j={j}",
            )
    for i, j, ell in itertools.combinations(range(1, n + 1), 3):
        if Dij(i, j) == Dij(j, ell):
            record("ft(2)", Dij(i, ell) == Dij(i, j), f"i={i} j={j} l={ell}")
        if Dij(j, ell) == Dij(i, ell):
            record(
                "ft(4)",
                Dij(n - ell + i, n - ell + j) == Dij(i, j),
                f"i={i} j={j} l={ell}",
            )
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if D(i) == 0 and Dij(i, j) == 0 and Dij(i + 1, j) == 1:
                record("ft(5)", D(n - j + i) == 1, f"i={i} j={j}")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if D(i) == 1 and D(j) == 0:
                record("ft(6)", D(n - j + i) == Dij(i + 1, j), f"i={i} j={j}")

    return {"checked": checked, "violations": violations}
