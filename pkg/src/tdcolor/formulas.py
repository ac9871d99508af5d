"""Closed-form values and bounds for total dominator chromatic numbers.

Every evaluator is defined only on the parameter range its result is
claimed for; anything outside raises :class:`FormulaRangeError`.

Note that :func:`path_tdc` reproduces the published closed form, which is
known to exceed the true optimum for n in {9, 10, 11, 14, 18}; see
``PATH_FORMULA_EXCEPTIONS`` and the exact solver.
"""
from __future__ import annotations

from typing import NamedTuple, Optional


class FormulaRangeError(ValueError):
    pass


class BoundPair(NamedTuple):
    lo: int
    hi: int


# P_2..P_7
PATH_SMALL = {2: 2, 3: 2, 4: 3, 5: 4, 6: 4, 7: 5}

# n -> exact value where the closed form is larger (exhaustive search, all n <= 31 checked)
PATH_FORMULA_EXCEPTIONS = {9: 6, 10: 7, 11: 7, 14: 9, 18: 11}


def path_tdc(n: int) -> int:
    """χ_d^t(P_n) per the published formula (small cases tabulated)."""
    if n < 2:
        raise FormulaRangeError(f"path order must be >= 2, got {n}")
    if n in PATH_SMALL:
        return PATH_SMALL[n]
    q, r = divmod(n, 4)
    if r == 0:
        return 2 * q + 2
    if r == 1:
        return 2 * q + 3
    return 2 * q + 4


def star_sub_tdc(n: int, k: int) -> int:
    """χ_d^t of the k-subdivided star K_{1,n}, for k in {3, 4}."""
    if n < 3:
        raise FormulaRangeError(f"star needs n >= 3, got {n}")
    if k == 3:
        return 2 * n + 1
    if k == 4:
        return 2 * n + 2
    raise FormulaRangeError(f"only k = 3 or 4 is covered, got {k}")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FormulaRangeError(msg)


def sandwich_thm22(m: int, k: int) -> BoundPair:
    """path_tdc(k+1) <= χ_d^t(G^{1/k}) <= (m-1)·path_tdc(k) + path_tdc(k+1)."""
    _need(m >= 1, f"m must be >= 1, got {m}")
    _need(k >= 2, f"k must be >= 2, got {k}")
    top = path_tdc(k + 1)
    return BoundPair(top, (m - 1) * path_tdc(k) + top)


def lower_thm24(m: int, k: int) -> int:
    _need(m >= 1, f"m must be >= 1, got {m}")
    _need(k >= 9, f"k must be >= 9, got {k}")
    return m * (path_tdc(k - 1) - 2) + 2


def lower_thm25(m: int, k: int) -> int:
    """Piecewise-in-k form of the k >= 9 lower bound."""
    _need(m >= 1, f"m must be >= 1, got {m}")
    _need(k >= 9, f"k must be >= 9, got {k}")
    r = k % 4
    if r == 0:
        return m * k // 2 + 2
    if r == 1:
        return m * ((k - 1) // 2) + 2
    if r == 2:
        return m * ((k - 2) // 2 + 1) + 2
    return m * ((k - 3) // 2 + 2) + 2


def upper_thm26(m: int, k: int) -> int:
    _need(m >= 1, f"m must be >= 1, got {m}")
    _need(k >= 7, f"k must be >= 7, got {k}")
    return m * (path_tdc(k + 1) - 2) + 2


def upper_thm27(m: int, k: int) -> int:
    """Piecewise-in-k form of the k >= 9 upper bound."""
    _need(m >= 1, f"m must be >= 1, got {m}")
    _need(k >= 9, f"k must be >= 9, got {k}")
    r = k % 4
    if r == 0:
        return m * (k // 2 + 1) + 2
    if r == 1:
        return m * ((k - 1) // 2 + 2) + 2
    if r == 2:
        return m * ((k - 2) // 2 + 2) + 2
    return m * ((k - 3) // 2 + 2) + 2


def henning_bounds(gamma_t: int, chi: int) -> BoundPair:
    """γ_t(G) <= χ_d^t(G) <= γ_t(G) + χ(G)."""
    _need(gamma_t >= 2, f"gamma_t must be >= 2, got {gamma_t}")
    _need(chi >= 1, f"chi must be >= 1, got {chi}")
    return BoundPair(gamma_t, gamma_t + chi)


def gamma_sandwich_sub(gamma_t_sub: int) -> BoundPair:
    """γ_t(G^{1/k}) <= χ_d^t(G^{1/k}) <= γ_t(G^{1/k}) + 2, for k >= 2."""
    _need(gamma_t_sub >= 2, f"gamma_t must be >= 2, got {gamma_t_sub}")
    return BoundPair(gamma_t_sub, gamma_t_sub + 2)


def edge_lower_thm_last(m: int, k: int) -> Optional[int]:
    """Lower bound m on χ_d^t(G^{1/k}) for k >= 4; None for k <= 3.

    The bound has counterexamples at k = 2 and k = 3, so it is not
    applicable there.
    """
    return m if k >= 4 else None


FORMULAS = {
    "path_tdc": path_tdc,
    "star_sub_tdc": star_sub_tdc,
    "sandwich_thm22": sandwich_thm22,
    "lower_thm24": lower_thm24,
    "lower_thm25": lower_thm25,
    "upper_thm26": upper_thm26,
    "upper_thm27": upper_thm27,
    "henning_bounds": henning_bounds,
    "gamma_sandwich_sub": gamma_sandwich_sub,
    "edge_lower_thm_last": edge_lower_thm_last,
}
