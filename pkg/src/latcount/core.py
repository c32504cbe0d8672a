"""Shared result types and errors used by every counting backend."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class CapacityError(RuntimeError):
    """A computation exceeded one of its configured resource bounds.

    Raised when trial division would have to search past its bound, or when
    an enumeration would yield more matrices than its cap.  Never raised for
    malformed input; those get ValueError.
    """


class DiscrepancyError(RuntimeError):
    """Two counting methods disagreed on the same (n, m).

    This always signals a bug somewhere: the methods are provably equal.
    ``results`` carries every (method, value) pair for diagnosis.
    """

    def __init__(self, n, m, results):
        self.n = n
        self.m = m
        self.results = list(results)
        detail = ", ".join(f"{method}={value}" for method, value in self.results)
        super().__init__(f"methods disagree for n={n}, m={m}: {detail}")


class Method(str, Enum):
    """The five ways of computing the sublattice count."""

    FACTORIZATION_SUM = "factorization-sum"
    RECURSION = "recursion"
    GRUBER = "gruber"
    DIRICHLET = "dirichlet"
    HNF = "hnf"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CountRequest:
    """A single counting query: dimension n, sublattice index m, method."""

    n: int
    m: int
    method: Method

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"index m must be >= 1, got {self.m}")


@dataclass(frozen=True)
class CountResult:
    """The value of one counting method, with optional work diagnostics."""

    value: int
    method: Method
    work_stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"count must be >= 1, got {self.value}")
