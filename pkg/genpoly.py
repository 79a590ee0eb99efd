"""generating polynomials by brute force and by recurrence"""

from collections import Counter
import logging
from typing import Callable, Literal

from pydantic import BaseModel, model_validator

from eulerian_settings import EulerianSettings, get_settings
from eulerian_util import chunk_ranges, get_worker_pool
from exactpoly import (
    ST,
    STXY,
    T,
    TY,
    X,
    CapExceededError,
    Exponent,
    Polynomial,
    VarSet,
    constant,
    monomial,
    poly_exact_div,
    poly_mul,
    poly_partial,
    variable,
)
from permstat import (
    Permutation,
    SignedPermutation,
    _asc_i,
    _cdes,
    _des,
    _des_b,
    _inverse,
    _inverse_signed,
    compose,
    compose_signed,
    iter_bn_words,
    iter_in_entries,
    iter_sn_words,
    size_bn,
    size_sn,
)

logger = logging.getLogger(__name__)

FamilyKind = Literal[
    "eulerian",
    "eulerian-homog",
    "two-sided",
    "two-sided-homog",
    "two-sided-tau",
    "type-B",
    "type-B-tau",
    "reversal-homog",
    "cyclic",
    "invseq",
]

family_kinds: tuple[str, ...] = FamilyKind.__args__

tau_kinds = {"two-sided-tau": "S", "type-B-tau": "B"}


class PolyFamily(BaseModel, frozen=True):
    """a generating polynomial: kind, size and (for tau kinds) the fixed tau"""

    kind: FamilyKind
    n: int
    tau: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def check_tau(self):
        """tau present iff the kind needs one, and of size n"""
        space = tau_kinds.get(self.kind)
        if space is None:
            if self.tau is not None:
                raise ValueError(f"{self.kind} takes no tau")
            return self
        if self.tau is None:
            raise ValueError(f"{self.kind} needs tau")
        if len(self.tau) != self.n:
            raise ValueError(f"tau {self.tau} has size {len(self.tau)}, n = {self.n}")
        if space == "S":
            Permutation(self.tau)
        else:
            SignedPermutation(self.tau)
        return self


# kind -> (space, varset); exponent conventions are frozen here:
# two-sided families shift by +1, type B and cyclic are unshifted
brute_spaces: dict[str, tuple[str, VarSet]] = {
    "eulerian": ("S", T),
    "eulerian-homog": ("S", TY),
    "two-sided": ("S", ST),
    "two-sided-homog": ("S", STXY),
    "two-sided-tau": ("S", ST),
    "reversal-homog": ("S", STXY),
    "cyclic": ("S", ST),
    "type-B": ("B", ST),
    "type-B-tau": ("B", ST),
    "invseq": ("I", ST),
    "dumont": ("I", X),
}


def _stat_fn(kind: str, n: int, tau: tuple[int, ...] | None) -> Callable[[tuple], Exponent]:
    """word -> exponent vector for the kind"""
    last = n - 1
    if kind == "eulerian":
        return lambda w: (_des(w) + 1,)
    if kind == "eulerian-homog":
        return lambda w: (_des(w) + 1, last - _des(w) + 1)
    if kind == "two-sided":
        return lambda w: (_des(_inverse(w)) + 1, _des(w) + 1)
    if kind == "two-sided-homog":

        def four(w):
            d, i = _des(w), _des(_inverse(w))
            return (i + 1, d + 1, last - i + 1, last - d + 1)

        return four
    if kind == "two-sided-tau":
        return lambda w: (_des(w) + 1, _des(compose(_inverse(w), tau)) + 1)
    if kind == "reversal-homog":
        rev = tuple(range(n, 0, -1))

        def four_rev(w):
            d, e = _des(w), _des(compose(_inverse(w), rev))
            return (d + 1, e + 1, last - d + 1, last - e + 1)

        return four_rev
    if kind == "cyclic":
        return lambda w: (_cdes(_inverse(w)), _cdes(w))
    if kind == "type-B":
        return lambda w: (_des_b(w), _des_b(_inverse_signed(w)))
    if kind == "type-B-tau":
        return lambda w: (_des_b(w), _des_b(compose_signed(_inverse_signed(w), tau)))
    if kind == "invseq":
        return lambda e: (len(set(e)), _asc_i(e) + 1)
    if kind == "dumont":
        return lambda e: (len(set(e)),)
    raise ValueError(f"unknown brute kind {kind}")


def _brute_chunk(
    kind: str, n: int, tau: tuple[int, ...] | None, lo: int, hi: int
) -> dict[Exponent, int]:
    """distribution of the kind's statistics over ranks lo..hi-1"""
    space, _ = brute_spaces[kind]
    stat = _stat_fn(kind, n, tau)
    words = {"S": iter_sn_words, "B": iter_bn_words, "I": iter_in_entries}[space]
    return dict(Counter(map(stat, words(n, lo, hi))))


def brute(
    kind: str,
    n: int,
    tau: tuple[int, ...] | None = None,
    *,
    workers: int | None = None,
    settings: EulerianSettings | None = None,
) -> Polynomial:
    """
    Enumerate the space of the kind and accumulate its distribution polynomial.

    The index range is split into contiguous chunks; each chunk returns a
    private term map, merged by addition. The result does not depend on the
    worker count.
    """
    settings = settings or get_settings()
    workers = workers or settings.workers
    space, varset = brute_spaces[kind]
    settings.check_cap(space, n, f"{kind} brute force")

    total = size_bn(n) if space == "B" else size_sn(n)
    ranges = chunk_ranges(total, workers * settings.chunks_per_worker)
    tasks = [(kind, n, tau, lo, hi) for lo, hi in ranges]
    logger.debug("brute %s n=%d: %d chunks over %d workers", kind, n, len(tasks), workers)

    terms: Counter = Counter()
    for part in get_worker_pool(workers).starmap(_brute_chunk, tasks):
        terms.update(part)
    return Polynomial(varset, terms)


def _word_of(tau, n: int, cls) -> tuple[int, ...]:
    word = tau.word if isinstance(tau, (Permutation, SignedPermutation)) else tuple(tau)
    if len(word) != n:
        raise ValueError(f"tau {word} has size {len(word)}, n = {n}")
    return cls(word).word


def brute_eulerian(n: int, **kwargs) -> Polynomial:
    """sum of t^(des+1) over S_n"""
    return brute("eulerian", n, **kwargs)


def brute_eulerian_homog(n: int, **kwargs) -> Polynomial:
    """sum of t^(des+1) y^(asc+1) over S_n"""
    return brute("eulerian-homog", n, **kwargs)


def brute_two_sided(n: int, **kwargs) -> Polynomial:
    """A_n(s,t) = sum of s^(ides+1) t^(des+1) over S_n"""
    return brute("two-sided", n, **kwargs)


def brute_four_variable(n: int, **kwargs) -> Polynomial:
    """A_n(s,t;x,y) = sum of s^(ides+1) t^(des+1) x^(iasc+1) y^(asc+1)"""
    return brute("two-sided-homog", n, **kwargs)


def brute_two_sided_tau(n: int, tau, **kwargs) -> Polynomial:
    """sum of s^(des(pi)+1) t^(des(pi^-1 tau)+1) over S_n"""
    return brute("two-sided-tau", n, _word_of(tau, n, Permutation), **kwargs)


def brute_reversal(n: int, **kwargs) -> Polynomial:
    """four-variable two-sided polynomial for tau = n...21"""
    return brute("reversal-homog", n, **kwargs)


def brute_typeB(n: int, tau=None, **kwargs) -> Polynomial:
    """
    B_n^(k)(s,t) = sum of s^des_B(sigma) t^des_B(sigma^-1 tau) over B_n.

    tau defaults to the identity.
    """
    if tau is None:
        return brute("type-B", n, **kwargs)
    return brute("type-B-tau", n, _word_of(tau, n, SignedPermutation), **kwargs)


def brute_cyclic(n: int, **kwargs) -> Polynomial:
    """sum of s^cdes(pi^-1) t^cdes(pi) over S_n"""
    if n < 2:
        raise CapExceededError(f"cyclic needs n >= 2, got {n}")
    return brute("cyclic", n, **kwargs)


def brute_invseq(n: int, **kwargs) -> Polynomial:
    """sum of s^dst(e) t^(asc_I(e)+1) over I_n"""
    return brute("invseq", n, **kwargs)


def brute_dumont(n: int, **kwargs) -> Polynomial:
    """sum of x^dst(e) over I_n"""
    return brute("dumont", n, **kwargs)


def _check_rec(n: int, settings: EulerianSettings | None, what: str):
    (settings or get_settings()).check_cap("rec", n, what)


def rec_eulerian(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """A_n(t) = n t A_{n-1} + t(1-t) A_{n-1}', A_1 = t"""
    _check_rec(n, settings, "eulerian recurrence")
    t = variable(T, "t")
    one = constant(T, 1)
    a = t
    t_1_t = t * (one - t)
    for k in range(2, n + 1):
        a = k * (t * a) + t_1_t * poly_partial(a, "t")
    return a


def rec_eulerian_homog(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """A_n(t;y) = ty (d/dt + d/dy) A_{n-1}(t;y), A_1 = ty"""
    _check_rec(n, settings, "homogenized eulerian recurrence")
    ty = monomial(TY, t=1, y=1)
    a = ty
    for _ in range(2, n + 1):
        a = ty * (poly_partial(a, "t") + poly_partial(a, "y"))
    return a


def rec_two_sided(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """
    n A_n(s,t) = (n^2 st + (n-1)(1-s)(1-t)) A_{n-1}
                 + n st(1-s) dA/ds + n st(1-t) dA/dt
                 + st(1-s)(1-t) d2A/dsdt,   A_1 = st
    """
    _check_rec(n, settings, "two-sided recurrence")
    one = constant(ST, 1)
    st = monomial(ST, s=1, t=1)
    one_s = one - variable(ST, "s")
    one_t = one - variable(ST, "t")
    corner = one_s * one_t
    st_one_s = st * one_s
    st_one_t = st * one_t
    st_corner = st * corner

    a = st
    for k in range(2, n + 1):
        da_s = poly_partial(a, "s")
        da_t = poly_partial(a, "t")
        da_st = poly_partial(da_s, "t")
        rhs = (
            (k * k * st + (k - 1) * corner) * a
            + k * (st_one_s * da_s)
            + k * (st_one_t * da_t)
            + st_corner * da_st
        )
        a = poly_exact_div(rhs, k)
    return a


_stxy = monomial(STXY, s=1, t=1, x=1, y=1)
_s_minus_x = variable(STXY, "s") - variable(STXY, "x")
_t_minus_y = variable(STXY, "t") - variable(STXY, "y")


def apply_homogeneous_derivation(p: Polynomial) -> Polynomial:
    """stxy (d/ds + d/dx)(d/dt + d/dy) p"""
    inner = poly_partial(p, "t") + poly_partial(p, "y")
    outer = poly_partial(inner, "s") + poly_partial(inner, "x")
    return poly_mul(_stxy, outer)


def apply_Tn(p: Polynomial, n: int) -> Polynomial:
    """T_n p = n(s-x)(t-y) p + stxy (d/ds + d/dx)(d/dt + d/dy) p"""
    return n * (_s_minus_x * _t_minus_y * p) + apply_homogeneous_derivation(p)


def apply_reversal_operator(p: Polynomial, n: int) -> Polynomial:
    """n(x-s)(t-y) p + stxy (d/ds + d/dx)(d/dt + d/dy) p"""
    return -n * (_s_minus_x * _t_minus_y * p) + apply_homogeneous_derivation(p)


def rec_four_variable(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """n A_n(s,t;x,y) = T_{n-1} A_{n-1}(s,t;x,y), A_1 = stxy"""
    _check_rec(n, settings, "four-variable recurrence")
    a = _stxy
    for k in range(2, n + 1):
        a = poly_exact_div(apply_Tn(a, k - 1), k)
    return a


def rec_reversal(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """recurrence for tau = n...21 with the sign-flipped multiplier, base stxy"""
    _check_rec(n, settings, "reversal recurrence")
    a = _stxy
    for k in range(2, n + 1):
        a = poly_exact_div(apply_reversal_operator(a, k - 1), k)
    return a


def rec_typeB(n: int, settings: EulerianSettings | None = None) -> Polynomial:
    """
    n B_n = (2n^2 st - n st + n) B_{n-1}
            + (2n st(1-s) + s(1-s)(1-t)) dB/ds
            + (2n st(1-t) + t(1-s)(1-t)) dB/dt
            + 2 st(1-s)(1-t) d2B/dsdt,   B_1 = 1 + st
    """
    _check_rec(n, settings, "type B recurrence")
    one = constant(ST, 1)
    s = variable(ST, "s")
    t = variable(ST, "t")
    st = s * t
    corner = (one - s) * (one - t)
    st_one_s = st * (one - s)
    st_one_t = st * (one - t)
    s_corner = s * corner
    t_corner = t * corner
    st_corner = st * corner

    b = one + st
    for k in range(2, n + 1):
        db_s = poly_partial(b, "s")
        db_t = poly_partial(b, "t")
        db_st = poly_partial(db_s, "t")
        rhs = (
            ((2 * k * k - k) * st + k * one) * b
            + (2 * k * st_one_s + s_corner) * db_s
            + (2 * k * st_one_t + t_corner) * db_t
            + 2 * (st_corner * db_st)
        )
        b = poly_exact_div(rhs, k)
    return b


# kind -> {method: (n, tau, workers, settings) -> Polynomial}
generators: dict[str, dict[str, Callable[..., Polynomial]]] = {
    "eulerian": {
        "brute": lambda n, tau, **kw: brute_eulerian(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_eulerian(n, settings),
    },
    "eulerian-homog": {
        "brute": lambda n, tau, **kw: brute_eulerian_homog(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_eulerian_homog(n, settings),
    },
    "two-sided": {
        "brute": lambda n, tau, **kw: brute_two_sided(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_two_sided(n, settings),
    },
    "two-sided-homog": {
        "brute": lambda n, tau, **kw: brute_four_variable(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_four_variable(n, settings),
    },
    "two-sided-tau": {
        "brute": lambda n, tau, **kw: brute_two_sided_tau(n, tau, **kw),
    },
    "type-B": {
        "brute": lambda n, tau, **kw: brute_typeB(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_typeB(n, settings),
    },
    "type-B-tau": {
        "brute": lambda n, tau, **kw: brute_typeB(n, tau, **kw),
    },
    "reversal-homog": {
        "brute": lambda n, tau, **kw: brute_reversal(n, **kw),
        "rec": lambda n, tau, settings=None, **_: rec_reversal(n, settings),
    },
    "cyclic": {
        "brute": lambda n, tau, **kw: brute_cyclic(n, **kw),
    },
    "invseq": {
        "brute": lambda n, tau, **kw: brute_invseq(n, **kw),
    },
}


def generate(
    family: PolyFamily,
    method: Literal["brute", "rec"],
    *,
    workers: int | None = None,
    settings: EulerianSettings | None = None,
) -> Polynomial:
    """dispatch a family to its brute force or recurrence generator"""
    methods = generators[family.kind]
    if method not in methods:
        raise CapExceededError(
            f"{family.kind} supports methods {sorted(methods)}, not {method}"
        )
    return methods[method](family.n, family.tau, workers=workers, settings=settings)


def family_mass(kind: str, n: int) -> int:
    """cardinality of the underlying set: n! or 2^n n!"""
    if kind in ("type-B", "type-B-tau"):
        return size_bn(n)
    return size_sn(n)
