"""Exact sparse linear maps between tensor powers of an n-dimensional space.

Basis vectors of the k-th tensor power are labelled by k-tuples over
{1..n}; the 0-th power is the scalars with the empty tuple as its basis
label.  A map stores only its nonzero rational coefficients, keyed by
(input label, output label), so compositions at sixteen tensor legs with
small n stay cheap.

Builders provided here:

* ``t_pi`` turns a two-row partition into its 0/1 spreading map: an
  input basis vector goes to the sum of all output basis vectors whose
  combined labelling is constant on every block.
* ``r_map`` builds the four pattern-gated maps on two legs: the gated
  swap, the gated identity and its complement, and the pair-to-pair
  spread over pattern-zero partners.
* ``s_box`` superposes those into the three mixed boxes (swap where the
  pattern is 1, something else where it is 0).

Two suites verify the identities that make the boxes a calculus: the
bridge identities relating them through rotations, and the product
rules, including the loop-count decomposition special to the five-cycle
pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .epsmat import EpsilonMatrix
from .partitions import SetPartition, TwoRowPartition
from .report import CheckResult, SuiteReport

Label = tuple[int, ...]

R_KINDS = ("cross1", "idid1", "idid0", "paarbaar0")
S_KINDS = ("cross-id", "cross-paar", "id-paar")


class TensorMap:
    """Sparse exact-rational map from the k_in-th to the k_out-th power."""

    __slots__ = ("n", "k_in", "k_out", "rows")

    def __init__(self, n: int, k_in: int, k_out: int,
                 entries: Iterable[tuple[Sequence[int], Sequence[int], Fraction]] = ()):
        if n < 1 or k_in < 0 or k_out < 0:
            raise ValueError("need n >= 1 and nonnegative degrees")
        self.n = n
        self.k_in = k_in
        self.k_out = k_out
        self.rows: dict[Label, dict[Label, Fraction]] = {}
        for i, j, c in entries:
            self.add_entry(tuple(i), tuple(j), Fraction(c))

    def add_entry(self, i: Label, j: Label, c: Fraction) -> None:
        if len(i) != self.k_in or len(j) != self.k_out:
            raise ValueError("label length does not match the degree")
        if any(not 1 <= v <= self.n for v in i + j):
            raise ValueError("label entry outside 1..n")
        if c == 0:
            return
        row = self.rows.setdefault(i, {})
        new = row.get(j, Fraction(0)) + c
        if new == 0:
            del row[j]
            if not row:
                del self.rows[i]
        else:
            row[j] = new

    # -- queries ----------------------------------------------------------

    def apply(self, i: Sequence[int]) -> dict[Label, Fraction]:
        """Image of a basis vector as {output label: coefficient}."""
        return dict(self.rows.get(tuple(i), {}))

    def scalar_at(self, i: Sequence[int], j: Sequence[int]) -> Fraction:
        return self.rows.get(tuple(i), {}).get(tuple(j), Fraction(0))

    def entries(self) -> list[tuple[Label, Label, Fraction]]:
        """All nonzero entries sorted by (output, input)."""
        out = [(i, j, c) for i, row in self.rows.items() for j, c in row.items()]
        out.sort(key=lambda e: (e[1], e[0]))
        return out

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorMap):
            return NotImplemented
        return (self.n, self.k_in, self.k_out) == (other.n, other.k_in, other.k_out) \
            and self.rows == other.rows

    def __hash__(self):
        raise TypeError("TensorMap is not hashable")

    def __repr__(self):
        return (f"TensorMap(n={self.n}, {self.k_in}->{self.k_out}, "
                f"{sum(len(r) for r in self.rows.values())} entries)")

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other: "TensorMap") -> "TensorMap":
        """Composition self after other."""
        if self.n != other.n:
            raise ValueError("base dimensions differ")
        if other.k_out != self.k_in:
            raise ValueError(f"cannot compose {self.k_in}->{self.k_out} "
                             f"after {other.k_in}->{other.k_out}")
        out = TensorMap(self.n, other.k_in, self.k_out)
        for i, mids in other.rows.items():
            for mid, c in mids.items():
                row = self.rows.get(mid)
                if not row:
                    continue
                for j, c2 in row.items():
                    out.add_entry(i, j, c * c2)
        return out

    def compose(self, other: "TensorMap") -> "TensorMap":
        return self @ other

    def tensor(self, other: "TensorMap") -> "TensorMap":
        if self.n != other.n:
            raise ValueError("base dimensions differ")
        out = TensorMap(self.n, self.k_in + other.k_in, self.k_out + other.k_out)
        for i1, row1 in self.rows.items():
            for i2, row2 in other.rows.items():
                key = i1 + i2
                for j1, c1 in row1.items():
                    for j2, c2 in row2.items():
                        out.add_entry(key, j1 + j2, c1 * c2)
        return out

    def adjoint(self) -> "TensorMap":
        """Transpose of the coefficient table (entries are rational, so
        conjugation is trivial)."""
        out = TensorMap(self.n, self.k_out, self.k_in)
        for i, row in self.rows.items():
            for j, c in row.items():
                out.add_entry(j, i, c)
        return out

    def __add__(self, other: "TensorMap") -> "TensorMap":
        if (self.n, self.k_in, self.k_out) != (other.n, other.k_in, other.k_out):
            raise ValueError("shapes differ")
        out = TensorMap(self.n, self.k_in, self.k_out)
        for src in (self, other):
            for i, row in src.rows.items():
                for j, c in row.items():
                    out.add_entry(i, j, c)
        return out

    def __neg__(self) -> "TensorMap":
        return Fraction(-1) * self

    def __sub__(self, other: "TensorMap") -> "TensorMap":
        return self + (-other)

    def __rmul__(self, c) -> "TensorMap":
        c = Fraction(c)
        out = TensorMap(self.n, self.k_in, self.k_out)
        if c != 0:
            for i, row in self.rows.items():
                for j, v in row.items():
                    out.add_entry(i, j, c * v)
        return out

    # -- constructors and serialisation -----------------------------------

    @classmethod
    def identity(cls, n: int, k: int) -> "TensorMap":
        out = cls(n, k, k)
        for i in product(range(1, n + 1), repeat=k):
            out.add_entry(i, i, Fraction(1))
        return out

    @classmethod
    def zero(cls, n: int, k_in: int, k_out: int) -> "TensorMap":
        return cls(n, k_in, k_out)

    def to_json(self) -> dict:
        return {"n": self.n, "k_in": self.k_in, "k_out": self.k_out,
                "entries": [{"in": list(i), "out": list(j),
                             "c": str(c.numerator) if c.denominator == 1
                             else f"{c.numerator}/{c.denominator}"}
                            for i, j, c in self.entries()]}

    @classmethod
    def from_json(cls, data: dict) -> "TensorMap":
        out = cls(data["n"], data["k_in"], data["k_out"])
        for e in data["entries"]:
            out.add_entry(tuple(e["in"]), tuple(e["out"]), Fraction(e["c"]))
        return out


# ---------------------------------------------------------------------------
# named small two-row partitions

PAAR = TwoRowPartition.of(0, 2, [(1, 2)])            # 1 -> sum_k e_k x e_k
BAAR = TwoRowPartition.of(2, 0, [(1, 2)])            # e_i x e_j -> [i == j]
IDID = TwoRowPartition.of(2, 2, [(1, 3), (2, 4)])    # identity on two legs
CROSS = TwoRowPartition.of(2, 2, [(1, 4), (2, 3)])   # the flip
PAARBAAR = TwoRowPartition.of(2, 2, [(1, 2), (3, 4)])
DREIPARTROT = TwoRowPartition.of(2, 1, [(1, 2, 3)])  # e_i x e_j -> [i == j] e_i
VIERPARTROT = TwoRowPartition.of(2, 2, [(1, 2, 3, 4)])


def t_pi(pi: TwoRowPartition, n: int) -> TensorMap:
    """The 0/1 spreading map of a two-row partition.

    e_i goes to the sum of e_j over all lower labellings j such that the
    combined word (i, j) is constant on every block.  Blocks with no
    upper point range freely over {1..n}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k, l = pi.k, pi.l
    blocks = pi.underlying.blocks
    out = TensorMap(n, k, l)
    for i in product(range(1, n + 1), repeat=k):
        forced: dict[int, int] = {}
        free_blocks: list[list[int]] = []
        ok = True
        for b in blocks:
            uppers = {i[p - 1] for p in b if p <= k}
            lowers = [p - k for p in b if p > k]
            if len(uppers) > 1:
                ok = False
                break
            if uppers:
                v = uppers.pop()
                for qpos in lowers:
                    forced[qpos] = v
            elif lowers:
                free_blocks.append(lowers)
        if not ok:
            continue
        for choice in product(range(1, n + 1), repeat=len(free_blocks)):
            assign = dict(forced)
            for positions, v in zip(free_blocks, choice):
                for qpos in positions:
                    assign[qpos] = v
            label = tuple(assign[qpos] for qpos in range(1, l + 1))
            out.add_entry(i, label, Fraction(1))
    return out


def _base_dim(eps: EpsilonMatrix, n: int | None) -> int:
    if n is None:
        return eps.n
    if n < 1 or n > eps.n:
        raise ValueError(f"base dimension must lie in 1..{eps.n}")
    return n


def r_map(kind: str, eps: EpsilonMatrix, n: int | None = None) -> TensorMap:
    """One of the four pattern-gated maps on two tensor legs.

    cross1:    e_i x e_j -> [eps_ij = 1] e_j x e_i
    idid1:     e_i x e_j -> [eps_ij = 1] e_i x e_j
    idid0:     e_i x e_j -> [eps_ij = 0] e_i x e_j
    paarbaar0: e_i x e_j -> [i = j] sum_k [eps_ik = 0] e_k x e_k
    """
    n = _base_dim(eps, n)
    out = TensorMap(n, 2, 2)
    one = Fraction(1)
    for i, j in product(range(1, n + 1), repeat=2):
        e = eps[i, j]
        if kind == "cross1":
            if e == 1:
                out.add_entry((i, j), (j, i), one)
        elif kind == "idid1":
            if e == 1:
                out.add_entry((i, j), (i, j), one)
        elif kind == "idid0":
            if e == 0:
                out.add_entry((i, j), (i, j), one)
        elif kind == "paarbaar0":
            if i == j:
                for m in range(1, n + 1):
                    if eps[i, m] == 0:
                        out.add_entry((i, j), (m, m), one)
        else:
            raise ValueError(f"unknown map kind {kind!r}; known: {', '.join(R_KINDS)}")
    return out


def s_box(kind: str, eps: EpsilonMatrix, n: int | None = None) -> TensorMap:
    """The mixed boxes: swap where the pattern is 1, plus a pattern-zero part."""
    if kind == "cross-id":
        return r_map("cross1", eps, n) + r_map("idid0", eps, n)
    if kind == "cross-paar":
        return r_map("cross1", eps, n) + r_map("paarbaar0", eps, n)
    if kind == "id-paar":
        return r_map("idid1", eps, n) + r_map("paarbaar0", eps, n)
    raise ValueError(f"unknown box kind {kind!r}; known: {', '.join(S_KINDS)}")


def eps_as_map(eps: EpsilonMatrix, n: int | None = None) -> TensorMap:
    """The pattern itself as a map: e_i -> sum_k [eps_ik = 1] e_k."""
    n = _base_dim(eps, n)
    out = TensorMap(n, 1, 1)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if eps[i, k] == 1:
                out.add_entry((i,), (k,), Fraction(1))
    return out


def free_neighbors_map(eps: EpsilonMatrix, n: int | None = None) -> TensorMap:
    """e_i -> sum over the pattern-zero partners of i (including i itself)."""
    n = _base_dim(eps, n)
    out = TensorMap(n, 1, 1)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if eps[i, k] == 0:
                out.add_entry((i,), (k,), Fraction(1))
    return out


# ---------------------------------------------------------------------------
# identity suites

def _compare(name: str, left: TensorMap, right: TensorMap) -> CheckResult:
    if left == right:
        return CheckResult(name, True)
    keys = set()
    for m in (left, right):
        for i, row in m.rows.items():
            for j in row:
                keys.add((i, j))
    for i, j in sorted(keys):
        a, b = left.scalar_at(i, j), right.scalar_at(i, j)
        if a != b:
            return CheckResult(name, False,
                               f"first difference at in={i} out={j}: {a} != {b}")
    return CheckResult(name, False, "shape mismatch")


def _bridge(middle: TensorMap) -> TensorMap:
    """Rotate a two-leg map by capping with a pair above and below:
    (baar x id x id) o (id x middle x id) o (id x id x paar)."""
    n = middle.n
    id1 = TensorMap.identity(n, 1)
    id2 = TensorMap.identity(n, 2)
    left = t_pi(BAAR, n).tensor(id2)
    mid = id1.tensor(middle).tensor(id1)
    right = id2.tensor(t_pi(PAAR, n))
    return left @ mid @ right


def intertwiner_identity_suite(eps: EpsilonMatrix, n: int | None = None) -> SuiteReport:
    """The equivalence identities between the pattern-gated maps.

    (a) the gated identity complement equals id - (gated swap)^2;
    (b) bridging the cross-id box yields the cross-paar box;
    (c) bridging the gated identity complement yields the pair spread;
    (d) the cross-paar box absorbs the four-point block map into the
        pair spread;
    (e) rotating the pair spread with the three-point block map gives
        the free-neighbour map on one leg.

    All compared as exact coefficient tables.
    """
    n = _base_dim(eps, n)
    id2 = TensorMap.identity(n, 2)
    cross1 = r_map("cross1", eps, n)
    idid0 = r_map("idid0", eps, n)
    paarbaar0 = r_map("paarbaar0", eps, n)
    s_ci = s_box("cross-id", eps, n)
    s_cp = s_box("cross-paar", eps, n)
    drei = t_pi(DREIPARTROT, n)
    checks = (
        _compare("idid0 = id - cross1 . cross1", idid0, id2 - (cross1 @ cross1)),
        _compare("bridge(cross-id) = cross-paar", _bridge(s_ci), s_cp),
        _compare("bridge(idid0) = paarbaar0", _bridge(idid0), paarbaar0),
        _compare("cross-paar . four-block = paarbaar0",
                 s_cp @ t_pi(VIERPARTROT, n), paarbaar0),
        _compare("three-block . paarbaar0 . three-block* = free-neighbour map",
                 drei @ paarbaar0 @ drei.adjoint(), free_neighbors_map(eps, n)),
    )
    return SuiteReport(checks)


def _loop_count(eps: EpsilonMatrix, n: int, i: int, k: int) -> int:
    return sum(1 for m in range(1, n + 1) if eps[i, m] == 0 and eps[m, k] == 0)


def box_calculus_suite(eps: EpsilonMatrix, n: int | None = None) -> SuiteReport:
    """Product rules for the mixed boxes.

    The cross-id box is an involution; cross-id and cross-paar commute
    and multiply to id-paar.  The square of the cross-paar box produces
    a loop count; for the five-cycle pattern that count collapses to
    [eps_ik = 0] + [i = k] + 1, so the square lands back in the span of
    the named maps.
    """
    n = _base_dim(eps, n)
    s_ci = s_box("cross-id", eps, n)
    s_cp = s_box("cross-paar", eps, n)
    s_ip = s_box("id-paar", eps, n)
    checks = [
        _compare("cross-id . cross-id = idid", s_ci @ s_ci, t_pi(IDID, n)),
        _compare("cross-id . cross-paar = id-paar", s_ci @ s_cp, s_ip),
        _compare("cross-paar . cross-id = id-paar", s_cp @ s_ci, s_ip),
    ]
    from .epsmat import preset
    if eps.entries == preset("cycle5").entries and n == 5:
        loop_ok = True
        detail = ""
        for i, k in product(range(1, 6), repeat=2):
            want = (1 if eps[i, k] == 0 else 0) + (1 if i == k else 0) + 1
            got = _loop_count(eps, 5, i, k)
            if got != want:
                loop_ok = False
                detail = f"loop count at ({i},{k}): {got} != {want}"
                break
        checks.append(CheckResult(
            "loop count = [eps_ik=0] + [i=k] + 1", loop_ok, detail))
        checks.append(_compare(
            "cross-paar^2 = id-paar + four-block + pair-over-pair",
            s_cp @ s_cp,
            s_ip + t_pi(VIERPARTROT, 5) + t_pi(PAARBAAR, 5)))
    return SuiteReport(tuple(checks))
