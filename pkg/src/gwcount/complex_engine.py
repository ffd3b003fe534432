"""Genus-0 Gromov-Witten invariants of P^N with hyperplane-power insertions.

The invariant <H^{c_1}, ..., H^{c_k}>_d counts rational curves of degree d
meeting k generic linear subspaces of the given codimensions (when the
dimension gap vanishes; otherwise it is 0 by convention).  Evaluation applies
the first matching rule:

  1. some c_i > N                -> 0 (the class vanishes)
  2. nonzero dimension gap       -> 0
  3. d = 0                       -> classical triple intersection: 1 iff
                                    k = 3 and c_1+c_2+c_3 = N, else 0
  4. some c_i = 0 and d >= 1     -> 0 (fundamental-class axiom)
  5. some c_i = 1 and d >= 1     -> d * <rest>_d (divisor axiom)
  6. k <= 2 and d >= 1           -> 1 iff d = 1 and insertions = {H^N, H^N}
                                    (the line through two points), else 0
  7. otherwise                   -> one solved step of the WDVV exchange
                                    relation (below), then recurse

Step 7 designates a donor slot H^{a+1} (canonically a minimal one), a
receiver slot H^e (canonically a maximal one) and an exchange partner H^c
(canonically the largest of the rest); with S the remaining insertions:

  <H^{a+1}, H^c, H^e, S>_d =
        d * <H^{a+c}, H^e, S>_d
      + <H^a, H^c, H^{e+1}, S>_d
      - d * <H^a, H^{c+e}, S>_d
      + sum over d1+d2 = d (d1, d2 >= 1), splits I+J = S, 0 <= f <= N of
          <H^a, H^c, I, H^f>_{d1} * <H^{N-f}, J, H^1, H^e>_{d2}
        - <H^a, H^1, I, H^f>_{d1} * <H^{N-f}, J, H^c, H^e>_{d2}

All arithmetic is exact; only the results of step 7 are memoized (the cheap
structural rules are recomputed on the fly), so the memo holds exactly the
keys whose evaluation required a full expansion.
"""

from __future__ import annotations

import sys
from typing import Callable

from .keys import CodimVector, ComplexKey, enumerate_splits

__all__ = [
    "ComplexEvalContext",
    "canonical_pivot",
    "eval_complex",
    "wdvv_step",
]

# The exchange relation nests one frame per unit of (degree, arity, spread);
# deep tables need more than CPython's default 1000 frames.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

PivotRule = Callable[[CodimVector], tuple[int, int, int]]


def canonical_pivot(cv: CodimVector) -> tuple[int, int, int]:
    """Default pivot: donate from a minimal slot into a maximal one.

    Returns (a+1, c, e) where a+1 is the minimal codimension, e the maximal
    one, and c the largest codimension among the remaining insertions.
    """
    a1 = cv.min_codim
    rest = cv.remove(a1)
    e = rest.max_codim
    c = rest.remove(e).max_codim
    return a1, c, e


class ComplexEvalContext:
    """Session-scoped evaluation state: memo table, statistics, pivot rule.

    Values are pure functions of the key, so concurrent insert-if-absent of
    identical values is harmless (dict writes are atomic under the GIL) and
    no locking is used.  A custom ``pivot_rule`` may pick any admissible
    pivot: the three designated slots must be present in the multiset and the
    donor codimension a+1 must not exceed the receiver codimension e (that
    ordering is what makes the recursion terminate).
    """

    __slots__ = ("memo", "pivot_rule", "calls", "hits", "deep_evals", "max_depth")

    def __init__(self, pivot_rule: PivotRule | None = None) -> None:
        self.memo: dict[tuple[int, int, tuple[tuple[int, int], ...]], int] = {}
        self.pivot_rule = pivot_rule or canonical_pivot
        self.calls = 0
        self.hits = 0
        self.deep_evals = 0
        self.max_depth = 0

    def evaluate(self, key: ComplexKey) -> int:
        return eval_complex(key, self)

    def stats(self) -> dict[str, int]:
        return {
            "calls": self.calls,
            "memo_hits": self.hits,
            "deep_evals": self.deep_evals,
            "memo_size": len(self.memo),
            "max_depth": self.max_depth,
        }


def eval_complex(key: ComplexKey, ctx: ComplexEvalContext) -> int:
    """Exact value of a complex invariant key (keys validate on construction)."""
    return _evaluate(key.N, key.d, key.insertions, ctx, 0)


def _evaluate(N: int, d: int, cv: CodimVector, ctx: ComplexEvalContext, depth: int) -> int:
    ctx.calls += 1
    if depth > ctx.max_depth:
        ctx.max_depth = depth
        if depth > 100_000:
            raise RuntimeError("complex recursion failed to terminate")
    pairs = cv.pairs
    if pairs and pairs[-1][0] > N:
        return 0
    k = cv.k
    if (N + 1) * d + N - 3 + k - cv.total_codim != 0:
        return 0
    if d == 0:
        return 1 if k == 3 and cv.total_codim == N else 0
    if pairs and pairs[0][0] == 0:
        return 0
    if pairs and pairs[0][0] == 1:
        return d * _evaluate(N, d, cv.remove(1), ctx, depth + 1)
    if k <= 2:
        return 1 if d == 1 and pairs == ((N, 2),) else 0
    memo_key = (N, d, pairs)
    cached = ctx.memo.get(memo_key)
    if cached is not None:
        ctx.hits += 1
        return cached
    value = wdvv_step(N, d, cv, ctx.pivot_rule(cv), ctx, depth)
    ctx.memo[memo_key] = value
    ctx.deep_evals += 1
    return value


def wdvv_step(
    N: int,
    d: int,
    cv: CodimVector,
    pivot: tuple[int, int, int],
    ctx: ComplexEvalContext,
    depth: int = 0,
) -> int:
    """One solved step of the exchange relation with an explicit pivot.

    ``pivot`` = (a+1, c, e) must name slots present in ``cv``; requires
    a+1 <= e so that the k-preserving term strictly spreads the codimension
    profile and the recursion terminates.  Exposed separately so tests can
    re-evaluate keys under arbitrary admissible pivots.
    """
    a1, c, e = pivot
    if a1 > e:
        raise ValueError(f"inadmissible pivot: donor {a1} exceeds receiver {e}")
    S = cv.remove(a1).remove(c).remove(e)
    a = a1 - 1
    nd = depth + 1
    total = d * _evaluate(N, d, S.add(a + c).add(e), ctx, nd)
    total += _evaluate(N, d, S.add(a).add(c).add(e + 1), ctx, nd)
    total -= d * _evaluate(N, d, S.add(a).add(c + e), ctx, nd)
    # Degeneration sum: precompute the four split-dependent bases once, they
    # do not depend on the degree split.
    split_bases = [
        (I.add(a).add(c), I.add(a).add(1), J.add(1).add(e), J.add(c).add(e), w)
        for I, J, w in enumerate_splits(S, 1)
    ]
    for d1 in range(1, d):
        d2 = d - d1
        for left_ac, left_a1, right_1e, right_ce, w in split_bases:
            for f in range(N + 1):
                g = N - f
                t = _evaluate(N, d1, left_ac.add(f), ctx, nd)
                if t:
                    t *= _evaluate(N, d2, right_1e.add(g), ctx, nd)
                    if t:
                        total += w * t
                t = _evaluate(N, d1, left_a1.add(f), ctx, nd)
                if t:
                    t *= _evaluate(N, d2, right_ce.add(g), ctx, nd)
                    if t:
                        total -= w * t
    return total
