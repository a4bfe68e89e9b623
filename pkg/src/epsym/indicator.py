"""Building the membership indicator of a partition as a tensor map.

Given a partition of k points and a commutation pattern, the functional
sending a basis vector e_i of the k-th tensor power to 1 when the
partition is an admissible refinement of ker i (and to 0 otherwise) can
be assembled from elementary maps by a two-move reduction:

* interval removal: if a block-closed interval restricts to a
  noncrossing partition, contract those legs with the adjoint spreading
  map of the restriction;
* leg swap: otherwise, swap two adjacent legs of crossing blocks whose
  left leg belongs to the later-starting block, through the
  pattern-gated swap on those legs.

The reduction strictly shrinks or untangles the partition and ends when
one removal consumes everything.  Composing the step maps yields a
degree (k -> 0) map; the oracle check compares its values on all (or
sampled) basis vectors against the independent combinatorial membership
test.

The move choices depend only on the partition, never on the pattern or
the family, so a trace can be reused across patterns; the pattern enters
through the gated swaps when the maps are materialised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .cumulants import CumulantSpec, kappa_pi, moment, format_fraction
from .epsmat import EpsilonMatrix
from .partitions import (Category, SetPartition, enumerate_partitions,
                         find_case2_index, find_noncrossing_subpartition,
                         in_nc_eps)
from .report import CheckReport
from .tensormaps import TensorMap, TwoRowPartition, r_map, t_pi

MATERIALIZE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class Step:
    """One reduction move and the partition it produced.

    case 1 removes the noncrossing restriction ``sigma`` of the interval
    p..q; case 2 swaps the legs on l and l+1.
    """

    case: int
    result: SetPartition
    points: int
    p: Optional[int] = None
    q: Optional[int] = None
    sigma: Optional[SetPartition] = None
    l: Optional[int] = None

    def to_json(self) -> dict:
        if self.case == 1:
            return {"case": 1, "p": self.p, "q": self.q,
                    "sigma": self.sigma.to_json(),
                    "result": self.result.to_json(), "points": self.points}
        return {"case": 2, "l": self.l,
                "result": self.result.to_json(), "points": self.points}


@dataclass(frozen=True)
class AlgorithmTrace:
    initial: SetPartition
    eps: EpsilonMatrix
    category: Category
    steps: tuple[Step, ...]

    def to_json(self) -> dict:
        return {"initial": self.initial.to_json(),
                "category": self.category.value,
                "eps": self.eps.to_json(),
                "steps": [s.to_json() for s in self.steps]}


def _reduction_steps(pi: SetPartition) -> tuple[Step, ...]:
    # cap converts a nontermination bug into a diagnosable error
    cap = pi.k * pi.k * len(pi.crossing_pairs) + pi.k
    steps: list[Step] = []
    cur = pi
    while cur.k > 0:
        if len(steps) > cap:
            raise RuntimeError(f"step cap {cap} exceeded; reduction logic bug")
        found = find_noncrossing_subpartition(cur)
        if found is not None:
            sigma, p, q = found
            cur = cur.remove_interval(p, q)
            steps.append(Step(1, cur, cur.k, p=p, q=q, sigma=sigma))
            continue
        l = find_case2_index(cur)
        if l is None:
            raise RuntimeError("no applicable move; violates the "
                               "crossing-structure guarantee")
        cur = cur.swap_points(l)
        steps.append(Step(2, cur, cur.k, l=l))
    return tuple(steps)


def _step_map(step: Step, k_before: int, eps: EpsilonMatrix, n: int) -> TensorMap:
    if step.case == 1:
        sigma = step.sigma
        core = t_pi(TwoRowPartition(sigma.k, 0, sigma), n)  # e_j -> [sigma <= ker j]
        left, right = step.p - 1, k_before - step.q
    else:
        core = r_map("cross1", eps, n)
        left, right = step.l - 1, k_before - step.l - 1
    out = core
    if left:
        out = TensorMap.identity(n, left).tensor(out)
    if right:
        out = out.tensor(TensorMap.identity(n, right))
    return out


def compose_trace_map(trace: AlgorithmTrace, n: int) -> TensorMap:
    """Materialise the composed step maps as one sparse (k -> 0) map."""
    k = trace.initial.k
    composed = TensorMap.identity(n, k)
    cur_k = k
    for step in trace.steps:
        composed = _step_map(step, cur_k, trace.eps, n) @ composed
        cur_k = step.points
    return composed


def evaluate_trace(trace: AlgorithmTrace, i: Sequence[int]) -> Fraction:
    """Value of the composed map on one basis vector, without
    materialising anything.  Every step sends a basis vector to at most
    one basis vector with coefficient 1, so a single walk suffices."""
    cur = tuple(i)
    eps = trace.eps
    for step in trace.steps:
        if step.case == 1:
            seg = cur[step.p - 1:step.q]
            for b in step.sigma.blocks:
                v = seg[b[0] - 1]
                if any(seg[x - 1] != v for x in b):
                    return Fraction(0)
            cur = cur[:step.p - 1] + cur[step.q:]
        else:
            a, b = cur[step.l - 1], cur[step.l]
            if eps[a, b] != 1:
                return Fraction(0)
            cur = cur[:step.l - 1] + (b, a) + cur[step.l + 1:]
    return Fraction(1)


def run_algorithm(pi: SetPartition, eps: EpsilonMatrix, cat: Category,
                  n: int) -> tuple[AlgorithmTrace, Optional[TensorMap]]:
    """Reduce ``pi`` and compose the step maps.

    Returns the trace and the materialised map when n**k stays within
    the materialisation limit, else None (use :func:`evaluate_trace`).
    The family must contain ``pi`` and, by the removal lemma, every
    intermediate partition; that is asserted step by step.
    """
    if n < 1 or n > eps.n:
        raise ValueError(f"base dimension must lie in 1..{eps.n}")
    if not cat.contains(pi):
        raise ValueError("partition is not in the requested family")
    steps = _reduction_steps(pi)
    for step in steps:
        if not cat.contains(step.result) or \
                (step.case == 1 and not cat.contains(step.sigma)):
            raise RuntimeError("family not preserved along the trace")
    trace = AlgorithmTrace(pi, eps, cat, steps)
    if n ** pi.k <= MATERIALIZE_LIMIT:
        return trace, compose_trace_map(trace, n)
    return trace, None


def verify_oracle(pi: SetPartition, eps: EpsilonMatrix, cat: Category, n: int,
                  sample: Optional[int] = None, seed: int = 0) -> CheckReport:
    """Compare the composed map against the combinatorial membership test.

    With ``sample`` unset, all n**k basis vectors are checked; otherwise
    that many are drawn reproducibly from the given seed.
    """
    trace, mp = run_algorithm(pi, eps, cat, n)
    k = pi.k
    if sample is None:
        if n ** k > MATERIALIZE_LIMIT:
            raise ValueError("space too large to enumerate; pass sample=")
        indices = product(range(1, n + 1), repeat=k)
    else:
        rng = random.Random(seed)
        indices = (tuple(rng.randint(1, n) for _ in range(k))
                   for _ in range(sample))
    checked = 0
    for i in indices:
        got = mp.scalar_at(i, ()) if mp is not None else evaluate_trace(trace, i)
        want = Fraction(1 if in_nc_eps(pi, i, eps) else 0)
        checked += 1
        if got != want:
            return CheckReport(False, checked,
                               f"pi={pi}, i={i}: map gives {got}, "
                               f"membership gives {want}")
    return CheckReport(True, checked)


def definetti_identity_report(eps: EpsilonMatrix, cat: Category,
                              spec: CumulantSpec, max_k: int) -> CheckReport:
    """Moments must equal the indicator-weighted cumulant sums.

    For every word j up to length max_k, the sum over partitions in the
    family of (value of the composed map at e_j) times the block-cumulant
    product must reproduce the moment of j restricted to the family.
    The indicator values come from the tensor route, making this an
    end-to-end consistency check between the two halves of the library.
    """
    if not spec.identically_distributed:
        raise ValueError("coordinates must be identically distributed")
    if spec.n < eps.n:
        raise ValueError("cumulant table is smaller than the pattern")
    n = eps.n
    checked = 0
    for k in range(max_k + 1):
        maps = [(pi, *run_algorithm(pi, eps, cat, n))
                for pi in enumerate_partitions(k, cat)]
        for j in product(range(1, n + 1), repeat=k):
            lhs = Fraction(0)
            for pi, trace, mp in maps:
                ind = mp.scalar_at(j, ()) if mp is not None \
                    else evaluate_trace(trace, j)
                if ind:
                    lhs += ind * kappa_pi(pi, j, spec)
            rhs = moment(j, eps, spec, cat)
            checked += 1
            if lhs != rhs:
                return CheckReport(False, checked,
                                   f"j={j}: indicator sum {format_fraction(lhs)} "
                                   f"!= moment {format_fraction(rhs)}")
    return CheckReport(True, checked)
