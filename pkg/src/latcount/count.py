"""The number of index-m sublattices of Z^n, by four independent routes.

All four methods compute the same multiplicative function:

  * factorization sum  -- fold d_1^0 d_2^1 ... d_n^(n-1) over the ordered
    factorizations d_1 ... d_n = m;
  * recursion          -- f_n(m) = sum over d | m of d * f_(n-1)(d), with
    f_1 identically 1;
  * Gruber products    -- two closed-form products over the prime
    factorization of m, evaluated with checked exact divisions;
  * Dirichlet          -- coefficient extraction from the zeta-factor
    convolution (lives in latcount.series).

They are provably equal, so `count_all_methods` treats any disagreement as
an internal bug and raises DiscrepancyError.
"""

from __future__ import annotations

from .arith import divisors, factorize, ordered_factorizations
from .core import CapacityError, CountRequest, CountResult, DiscrepancyError, Method
from .hnf import DEFAULT_ENUMERATION_CAP, count_by_enumeration
from .series import count_by_dirichlet

__all__ = [
    "CountRequest",
    "CountResult",
    "Method",
    "count_all_methods",
    "count_by_factorization_sum",
    "count_by_gruber",
    "count_by_recursion",
    "run_count",
]


def _check_args(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"dimension n must be >= 1, got {n}")
    if m < 1:
        raise ValueError(f"index m must be >= 1, got {m}")


def count_by_factorization_sum(n: int, m: int) -> CountResult:
    """Sum d_1^0 d_2^1 ... d_n^(n-1) over all ordered factorizations of m."""
    _check_args(n, m)
    total = 0
    tuples = 0
    for parts in ordered_factorizations(m, n):
        term = 1
        for i, d in enumerate(parts):
            term *= d**i
        total += term
        tuples += 1
    return CountResult(total, Method.FACTORIZATION_SUM, work_stats={"tuples": tuples})


def count_by_recursion(n: int, m: int) -> CountResult:
    """Apply f_n(m) = sum_{d | m} d * f_(n-1)(d) down to the base f_1 = 1.

    A rank-1 group has exactly one subgroup of each index, hence the base
    case.  Levels are filled bottom-up over the divisors of m, so the
    memo table lives only for the duration of this call.
    """
    _check_args(n, m)
    divs = divisors(m)
    sub_divisors = {d: [e for e in divs if d % e == 0] for d in divs}
    values = {d: 1 for d in divs}
    visits = 0
    for _ in range(n - 1):
        values = {d: sum(e * values[e] for e in sub_divisors[d]) for d in divs}
        visits += sum(len(sub_divisors[d]) for d in divs)
    return CountResult(values[m], Method.RECURSION, work_stats={"divisor_visits": visits})


def count_by_gruber(n: int, m: int) -> CountResult:
    """Evaluate both closed-form products over the prime factorization of m.

    For m = p_1^r_1 ... p_k^r_k the count is

        prod_i prod_{j=1..r_i} (p_i^(n+j-1) - 1) / (p_i^j - 1)
      = prod_i prod_{j=1..n-1} (p_i^(r_i+j) - 1) / (p_i^j - 1).

    Each running per-prime product is an integer, so the divisions are
    performed stepwise and checked; an inexact division or a mismatch
    between the two forms raises RuntimeError (an implementation bug,
    never bad input).
    """
    _check_args(n, m)
    fact = factorize(m)

    first = 1
    for p, r in fact.factors:
        local = 1
        for j in range(1, r + 1):
            local, remainder = divmod(local * (p ** (n + j - 1) - 1), p**j - 1)
            if remainder:
                raise RuntimeError(
                    f"inexact division in first product form at p={p}, j={j} (n={n}, m={m})"
                )
        first *= local

    second = 1
    for p, r in fact.factors:
        local = 1
        for j in range(1, n):
            local, remainder = divmod(local * (p ** (r + j) - 1), p**j - 1)
            if remainder:
                raise RuntimeError(
                    f"inexact division in second product form at p={p}, j={j} (n={n}, m={m})"
                )
        second *= local

    if first != second:
        raise RuntimeError(
            f"product forms disagree for n={n}, m={m}: {first} versus {second}"
        )
    return CountResult(first, Method.GRUBER, work_stats={"primes": len(fact.factors)})


_DISPATCH = {
    Method.FACTORIZATION_SUM: count_by_factorization_sum,
    Method.RECURSION: count_by_recursion,
    Method.GRUBER: count_by_gruber,
    Method.DIRICHLET: count_by_dirichlet,
}


def run_count(request: CountRequest) -> CountResult:
    """Run the single method named by the request."""
    if request.method is Method.HNF:
        return count_by_enumeration(request.n, request.m)
    return _DISPATCH[request.method](request.n, request.m)


def count_all_methods(
    n: int,
    m: int,
    include_enumeration: bool = False,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[CountResult]:
    """Run every applicable method and insist that they agree.

    Enumeration joins in only when requested, and is skipped automatically
    when the (cheap) product formula predicts a count above the cap;
    everything else always runs.  Results come back sorted by method name
    so the aggregation order never depends on evaluation order.
    """
    _check_args(n, m)
    results = [
        count_by_factorization_sum(n, m),
        count_by_recursion(n, m),
        count_by_gruber(n, m),
        count_by_dirichlet(n, m),
    ]
    if include_enumeration:
        predicted = results[2].value
        if predicted <= enumeration_cap:
            results.append(count_by_enumeration(n, m, cap=enumeration_cap))
    results.sort(key=lambda r: r.method.value)

    values = {r.value for r in results}
    if len(values) > 1:
        raise DiscrepancyError(n, m, [(r.method.value, r.value) for r in results])
    return results
