"""Machine-readable classification tables and case matching.

Tables 1 through 9 list, per ambient simple type, the parabolic-and-active-
set data that are spherical with an indivisible factor structure, together
with the rank and the set of spherical roots.  Rows are code-level
constructors (index families are clearest as code); ``dump`` emits concrete
instantiations as JSON for external diffing.

Numbering used throughout this package:

  1  single active root, single complement node (all types)
  2  two active roots on one complement node: the B chain row and one F4 row
  3  type C, two complement nodes            (17 rows)
  4  type D, two complement nodes            (13 rows)
  5  types A and B, two complement nodes     (A: 8 rows, B: 4 rows)
  6  F4 (7 rows)   7  E6 (8 rows)   8  E7 (9 rows)   9  E8 (9 rows)

Row order inside each table follows the published order; table 5 lists the
A rows first.  Parameters are ``(k,)`` or ``(k, l)`` complement positions
where these are not forced by the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from . import rootsystem as rsmod
from .errors import ParamsOutOfRange, UnclassifiedCase, UnclassifiedLeaf
from .rootsystem import Vector
from .subgroup import SubgroupDatum

Params = tuple[int, ...]


def _e(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def _seg(n: int, i: int, j: int, c: int = 1) -> Vector:
    """c*(alpha_i + ... + alpha_j); empty ranges give the zero vector."""
    return tuple(c if i <= a <= j else 0 for a in range(1, n + 1))


def _add(*vs: Vector) -> Vector:
    return tuple(sum(col) for col in zip(*vs))


def _mk(n: int, idxs: Iterable[int]) -> Vector:
    """Vector with one unit per listed index (repeats give coefficient 2)."""
    out = [0] * n
    for i in idxs:
        out[i - 1] += 1
    return tuple(out)


def _units(n: int, lo: int, hi: int) -> list[Vector]:
    return [_e(n, i) for i in range(lo, hi + 1)]


@dataclass(frozen=True)
class RowSpec:
    table_id: int
    row_id: int
    family: str
    n_ok: Callable[[int], bool]
    params_for: Callable[[int], list[Params]]
    build: Callable[[int, Params], tuple]  # -> (complement, psi, rank, sigma)


@dataclass(frozen=True)
class RowInstance:
    table_id: int
    row_id: int
    family: str
    n: int
    params: Params
    complement: tuple[int, ...]
    psi: tuple[Vector, ...]
    rank: int
    sigma: tuple[Vector, ...]


def _instance(spec: RowSpec, n: int, params: Params) -> RowInstance:
    complement, psi, rank, sigma = spec.build(n, params)
    return RowInstance(
        spec.table_id, spec.row_id, spec.family, n, params,
        tuple(complement), tuple(sorted(psi)), rank,
        tuple(sorted(sigma, key=lambda v: (sum(v), v))))


def _fixed(*params_lists: Params) -> Callable[[int], list[Params]]:
    lists = list(params_lists)
    return lambda n: lists


_ROWS: list[RowSpec] = []


def _row(table_id, row_id, family, n_ok, params_for, build):
    _ROWS.append(RowSpec(table_id, row_id, family, n_ok, params_for, build))


# --- table 1: one active root on one complement node -----------------------

def _t1(complement_k):
    def wrap(fn):
        def build(n, params):
            k = complement_k(n, params)
            rank, sigma = fn(n, k)
            return (k,), ((1,),), rank, sigma
        return build
    return wrap


@_t1(lambda n, p: p[0])
def _t1r1(n, k):  # (A_n, k), k <= (n+1)/2
    sigma = [_add(_e(n, i), _e(n, n + 1 - i)) for i in range(1, k)]
    sigma.append(_seg(n, k, n + 1 - k))
    return k, sigma


@_t1(lambda n, p: 1)
def _t1r2(n, k):  # (B_n, 1)
    return 2, [_e(n, 1), _seg(n, 2, n, 2)]


@_t1(lambda n, p: n)
def _t1r3(n, k):  # (B_n, n)
    return 1, [_seg(n, 1, n)]


@_t1(lambda n, p: 1)
def _t1r4(n, k):  # (C_n, 1)
    return 1, [_add(_e(n, 1), _seg(n, 2, n - 1, 2), _e(n, n))]


@_t1(lambda n, p: 2)
def _t1r5(n, k):  # (C_n, 2), n >= 4
    return 3, [_add(_e(n, 1), _e(n, 3)), _e(n, 2),
               _add(_e(n, 3), _seg(n, 4, n - 1, 2), _e(n, n))]


@_t1(lambda n, p: 3)
def _t1r6(n, k):  # (C_5, 3)
    return 5, _units(n, 1, 5)


@_t1(lambda n, p: 3)
def _t1r7(n, k):  # (C_n, 3), n >= 6
    return 6, _units(n, 1, 5) + [_add(_e(n, 5), _seg(n, 6, n - 1, 2), _e(n, n))]


@_t1(lambda n, p: n - 2)
def _t1r8(n, k):  # (C_n, n-2), n >= 6
    return 6, _units(n, 1, 3) + [_e(n, n - 1), _e(n, n), _seg(n, 4, n - 2)]


@_t1(lambda n, p: n - 1)
def _t1r9(n, k):  # (C_n, n-1)
    return 2, [_add(_e(n, 1), _e(n, n)), _seg(n, 2, n - 1)]


@_t1(lambda n, p: n)
def _t1r10(n, k):  # (C_n, n)
    return n, [_seg(n, i, i, 2) for i in range(1, n)] + [_e(n, n)]


@_t1(lambda n, p: 1)
def _t1r11(n, k):  # (D_n, 1)
    return 2, [_e(n, 1), _add(_seg(n, 2, n - 2, 2), _e(n, n - 1), _e(n, n))]


@_t1(lambda n, p: n)
def _t1r12(n, k):  # (D_n, n), n odd
    m = (n - 1) // 2
    sigma = [_mk(n, (2 * i - 1, 2 * i, 2 * i, 2 * i + 1)) for i in range(1, m)]
    sigma.append(_mk(n, (n - 2, n - 1, n)))
    return m, sigma


@_t1(lambda n, p: n)
def _t1r13(n, k):  # (D_n, n), n even
    return n // 2, [_mk(n, (2 * i - 1, 2 * i, 2 * i, 2 * i + 1))
                    for i in range(1, n // 2)] + [_e(n, n)]


@_t1(lambda n, p: 1)
def _t1r14(n, k):  # (G_2, 1)
    return 1, [_mk(n, (1, 2))]


@_t1(lambda n, p: 3)
def _t1r15(n, k):  # (F_4, 3)
    return 2, [_mk(n, (1, 4)), _mk(n, (2, 3))]


@_t1(lambda n, p: 4)
def _t1r16(n, k):  # (F_4, 4)
    return 2, [_mk(n, (1, 2, 2, 3, 3, 3)), _e(n, 4)]


@_t1(lambda n, p: 6)
def _t1r17(n, k):  # (E_6, 6)
    return 2, [_mk(n, (1, 3, 4, 5, 6)), _mk(n, (2, 2, 3, 4, 4, 5))]


@_t1(lambda n, p: 7)
def _t1r18(n, k):  # (E_7, 7)
    return 3, [_mk(n, (1, 1, 2, 3, 3, 4, 4, 5)),
               _mk(n, (2, 3, 4, 4, 5, 5, 6, 6)), _e(n, 7)]


_row(1, 1, "A", lambda n: n >= 1,
     lambda n: [(k,) for k in range(1, (n + 1) // 2 + 1)], _t1r1)
_row(1, 2, "B", lambda n: n >= 3, _fixed(()), _t1r2)
_row(1, 3, "B", lambda n: n >= 3, _fixed(()), _t1r3)
_row(1, 4, "C", lambda n: n >= 2, _fixed(()), _t1r4)
_row(1, 5, "C", lambda n: n >= 4, _fixed(()), _t1r5)
_row(1, 6, "C", lambda n: n == 5, _fixed(()), _t1r6)
_row(1, 7, "C", lambda n: n >= 6, _fixed(()), _t1r7)
_row(1, 8, "C", lambda n: n >= 6, _fixed(()), _t1r8)
_row(1, 9, "C", lambda n: n >= 3, _fixed(()), _t1r9)
_row(1, 10, "C", lambda n: n >= 2, _fixed(()), _t1r10)
_row(1, 11, "D", lambda n: n >= 4, _fixed(()), _t1r11)
_row(1, 12, "D", lambda n: n >= 5 and n % 2 == 1, _fixed(()), _t1r12)
_row(1, 13, "D", lambda n: n >= 4 and n % 2 == 0, _fixed(()), _t1r13)
_row(1, 14, "G2", lambda n: n == 2, _fixed(()), _t1r14)
_row(1, 15, "F4", lambda n: n == 4, _fixed(()), _t1r15)
_row(1, 16, "F4", lambda n: n == 4, _fixed(()), _t1r16)
_row(1, 17, "E6", lambda n: n == 6, _fixed(()), _t1r17)
_row(1, 18, "E7", lambda n: n == 7, _fixed(()), _t1r18)


# --- table 2: two active roots on one complement node ----------------------

def _t2r1(n, params):  # (B_n, n, 2)
    sigma = [_mk(n, (i, i + 1)) for i in range(1, n)] + [_e(n, n)]
    return (n,), ((1,), (2,)), n, sigma


def _t2r2(n, params):  # (F_4, 3, 3)
    return (3,), ((1,), (3,)), 4, [_e(n, 1), _mk(n, (2, 3)), _e(n, 3), _e(n, 4)]


_row(2, 1, "B", lambda n: n >= 3, _fixed(()), _t2r1)
_row(2, 2, "F4", lambda n: n == 4, _fixed(()), _t2r2)


# --- tables 3-5: two complement nodes, classical types ----------------------

def _pair_row(table_id, row_id, family, n_ok, params_for, kl, pq_rs, rank_fn, sigma_fn):
    def build(n, params):
        k, l = kl(n, params)
        if not (1 <= k < l <= n):
            raise ParamsOutOfRange(f"complement ({k},{l}) out of range at n={n}")
        psi = tuple(sorted(pq_rs))
        return (k, l), psi, rank_fn(n, k, l), sigma_fn(n, k, l)
    _row(table_id, row_id, family, n_ok, params_for, build)


def _ks(lo, hi_fn):
    return lambda n: [(k,) for k in range(lo, hi_fn(n) + 1)]


# table 3: type C
_pair_row(3, 1, "C", lambda n: n == 3, _fixed(()),
          lambda n, p: (1, 2), ((0, 1), (1, 1)),
          lambda n, k, l: 3, lambda n, k, l: _units(n, 1, 3))
_pair_row(3, 2, "C", lambda n: n >= 4, _fixed(()),
          lambda n, p: (1, 2), ((0, 1), (1, 1)),
          lambda n, k, l: 4,
          lambda n, k, l: _units(n, 1, 3) +
          [_add(_e(n, 3), _seg(n, 4, n - 1, 2), _e(n, n))])
_pair_row(3, 3, "C", lambda n: n == 4, _fixed(()),
          lambda n, p: (1, 3), ((1, 0), (0, 1)),
          lambda n, k, l: 4, lambda n, k, l: _units(n, 1, 4))
_pair_row(3, 4, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (1, 3), ((1, 0), (0, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: _units(n, 1, 4) +
          [_add(_e(n, 4), _seg(n, 5, n - 1, 2), _e(n, n))])
_pair_row(3, 5, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (1, n - 1), ((1, 0), (0, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 2),
                           _e(n, n - 1), _e(n, n)])
_pair_row(3, 6, "C", lambda n: n >= 4, _fixed(()),
          lambda n, p: (1, n - 1), ((0, 1), (1, 1)),
          lambda n, k, l: 4,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 1), _e(n, n)])
_pair_row(3, 7, "C", lambda n: n >= 3, _fixed(()),
          lambda n, p: (1, n), ((1, 0), (1, 1)),
          lambda n, k, l: 3,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 1), _e(n, n)])
_pair_row(3, 8, "C", lambda n: n == 4, _fixed(()),
          lambda n, p: (2, 3), ((1, 0), (1, 1)),
          lambda n, k, l: 4, lambda n, k, l: _units(n, 1, 4))
_pair_row(3, 9, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (2, 3), ((1, 0), (1, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: _units(n, 1, 4) +
          [_add(_e(n, 4), _seg(n, 5, n - 1, 2), _e(n, n))])
_pair_row(3, 10, "C", lambda n: n >= 6, _ks(4, lambda n: n - 2),
          lambda n, p: (2, p[0]), ((1, 0), (1, 1)),
          lambda n, k, l: 6,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, l - 2), _e(n, l - 1),
                           _e(n, l), _e(n, l + 1),
                           _add(_e(n, l + 1), _seg(n, l + 2, n - 1, 2), _e(n, n))])
_pair_row(3, 11, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (2, n - 1), ((1, 0), (1, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 3), _e(n, n - 2),
                           _e(n, n - 1), _e(n, n)])
_pair_row(3, 12, "C", lambda n: n >= 6, _ks(2, lambda n: n - 4),
          lambda n, p: (p[0], p[0] + 2), ((1, 0), (0, 1)),
          lambda n, k, l: 6,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, k), _e(n, k + 1),
                           _e(n, k + 2), _e(n, k + 3),
                           _add(_e(n, k + 3), _seg(n, k + 4, n - 1, 2), _e(n, n))])
_pair_row(3, 13, "C", lambda n: n >= 5, _ks(2, lambda n: n - 3),
          lambda n, p: (p[0], n - 1), ((0, 1), (1, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, k), _e(n, k + 1),
                           _seg(n, k + 2, n - 1), _e(n, n)])
_pair_row(3, 14, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (n - 3, n - 1), ((1, 0), (0, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 3), _e(n, n - 2),
                           _e(n, n - 1), _e(n, n)])
_pair_row(3, 15, "C", lambda n: n >= 5, _fixed(()),
          lambda n, p: (n - 2, n - 1), ((1, 0), (1, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 2),
                           _e(n, n - 1), _e(n, n)])
_pair_row(3, 16, "C", lambda n: n >= 4, _fixed(()),
          lambda n, p: (n - 2, n - 1), ((0, 1), (1, 1)),
          lambda n, k, l: 4,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 2), _e(n, n - 1), _e(n, n)])
_pair_row(3, 17, "C", lambda n: n >= 3, _fixed(()),
          lambda n, p: (n - 1, n), ((1, 0), (1, 1)),
          lambda n, k, l: 3,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 1), _e(n, n)])


# table 4: type D
def _d_chain_sigma(n, even_tail):
    if even_tail:
        return [_mk(n, (i, i + 1)) for i in range(1, n - 2)] + \
            [_mk(n, (n - 2, n)), _e(n, n - 1)]
    return [_mk(n, (i, i + 1)) for i in range(1, n - 1)] + [_e(n, n)]


_pair_row(4, 1, "D", lambda n: n >= 5 and n % 2 == 1, _fixed(()),
          lambda n, p: (1, n), ((1, 0), (0, 1)),
          lambda n, k, l: n - 1, lambda n, k, l: _d_chain_sigma(n, False))
_pair_row(4, 2, "D", lambda n: n >= 4 and n % 2 == 0, _fixed(()),
          lambda n, p: (1, n), ((1, 0), (0, 1)),
          lambda n, k, l: n - 1, lambda n, k, l: _d_chain_sigma(n, True))
_pair_row(4, 3, "D", lambda n: n >= 4, _fixed(()),
          lambda n, p: (1, n), ((1, 0), (1, 1)),
          lambda n, k, l: 3,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 1),
                           _add(_seg(n, 2, n - 2), _e(n, n))])
_pair_row(4, 4, "D", lambda n: n >= 4, _fixed(()),
          lambda n, p: (1, n), ((0, 1), (1, 1)),
          lambda n, k, l: n - 1, lambda n, k, l: _d_chain_sigma(n, False))
_pair_row(4, 5, "D", lambda n: n == 5, _fixed(()),
          lambda n, p: (2, 5), ((1, 0), (0, 1)),
          lambda n, k, l: 5, lambda n, k, l: _units(n, 1, 5))
_pair_row(4, 6, "D", lambda n: n == 5, _fixed(()),
          lambda n, p: (2, 5), ((0, 1), (1, 1)),
          lambda n, k, l: 5, lambda n, k, l: _units(n, 1, 5))
_pair_row(4, 7, "D", lambda n: n == 5, _fixed(()),
          lambda n, p: (3, 5), ((1, 0), (2, 1)),
          lambda n, k, l: 5, lambda n, k, l: _units(n, 1, 5))
_pair_row(4, 8, "D", lambda n: n >= 6, _fixed(()),
          lambda n, p: (3, n), ((1, 0), (2, 1)),
          lambda n, k, l: 6,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 3),
                           _e(n, n - 2), _e(n, n - 1), _e(n, n)])
_pair_row(4, 9, "D", lambda n: n >= 6, _fixed(()),
          lambda n, p: (n - 3, n), ((1, 0), (0, 1)),
          lambda n, k, l: 6,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 3),
                           _e(n, n - 2), _e(n, n - 1), _e(n, n)])
_pair_row(4, 10, "D", lambda n: n >= 6, _fixed(()),
          lambda n, p: (n - 3, n), ((0, 1), (1, 1)),
          lambda n, k, l: 6,
          lambda n, k, l: [_e(n, 1), _e(n, 2), _seg(n, 3, n - 3),
                           _e(n, n - 2), _e(n, n - 1), _e(n, n)])
_pair_row(4, 11, "D", lambda n: n >= 4, _fixed(()),
          lambda n, p: (n - 1, n), ((1, 0), (0, 1)),
          lambda n, k, l: 3,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, n - 1),
                           _add(_seg(n, 2, n - 2), _e(n, n))])
_pair_row(4, 12, "D", lambda n: n >= 5 and n % 2 == 1, _fixed(()),
          lambda n, p: (n - 1, n), ((1, 0), (1, 1)),
          lambda n, k, l: n - 1, lambda n, k, l: _d_chain_sigma(n, False))
_pair_row(4, 13, "D", lambda n: n >= 4 and n % 2 == 0, _fixed(()),
          lambda n, p: (n - 1, n), ((1, 0), (1, 1)),
          lambda n, k, l: n - 1, lambda n, k, l: _d_chain_sigma(n, True))


# table 5: types A and B, rows sharing the (k, n) complement patterns
def _t5_sigma_1(n, k, l):
    return _units(n, 1, k) + [_seg(n, k + 1, n - k)] + _units(n, n - k + 1, n)


def _t5_sigma_2(n, k, l):
    return _units(n, 1, n - k - 1) + [_seg(n, n - k, k)] + _units(n, k + 1, n)


def _t5_sigma_3(n, k, l):
    return _units(n, 1, k - 1) + [_seg(n, k, n - k)] + _units(n, n - k + 1, n)


def _t5_sigma_4(n, k, l):
    return _units(n, 1, n - k) + [_seg(n, n - k + 1, k)] + _units(n, k + 1, n)


for _fam, _base in (("A", 0), ("B", 8)):
    _min_n = 3
    _pair_row(5, _base + 1, _fam, lambda n: n >= _min_n,
              _ks(1, lambda n: (n - 1) // 2),
              lambda n, p: (p[0], n), ((1, 0), (0, 1)),
              lambda n, k, l: 2 * k + 1, _t5_sigma_1)
    _pair_row(5, _base + 2, _fam, lambda n: n >= _min_n,
              lambda n: [(k,) for k in range((n + 1) // 2, n - 1) if n - k >= 2],
              lambda n, p: (p[0], n), ((1, 0), (0, 1)),
              lambda n, k, l: 2 * (n - k), _t5_sigma_2)
    _pair_row(5, _base + 3, _fam, lambda n: n >= _min_n,
              lambda n: [(k,) for k in range(2, n // 2 + 1)],
              lambda n, p: (p[0], n), ((1, 0), (1, 1)),
              lambda n, k, l: 2 * k, _t5_sigma_3)
    _pair_row(5, _base + 4, _fam, lambda n: n >= _min_n,
              lambda n: [(k,) for k in range(max(1, n // 2 + 1), n)
                         if k > n - k >= 1],
              lambda n, p: (p[0], n), ((1, 0), (1, 1)),
              lambda n, k, l: 2 * (n - k) + 1, _t5_sigma_4)

_pair_row(5, 5, "A", lambda n: n >= 4,
          _ks(2, lambda n: n // 2),
          lambda n, p: (p[0], p[0] + 1), ((1, 0), (1, 1)),
          lambda n, k, l: 2 * k,
          lambda n, k, l: _units(n, 1, k) + [_seg(n, k + 1, n - k + 1)] +
          _units(n, n - k + 2, n))
_pair_row(5, 6, "A", lambda n: n >= 5,
          lambda n: [(k,) for k in range(2, n - 1) if k > n - k >= 2],
          lambda n, p: (p[0], p[0] + 1), ((1, 0), (1, 1)),
          lambda n, k, l: 2 * (n - k) + 1, _t5_sigma_4)
_pair_row(5, 7, "A", lambda n: n >= 5, _ks(2, lambda n: n - 3),
          lambda n, p: (p[0], p[0] + 2), ((1, 0), (0, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, k), _e(n, k + 1),
                           _seg(n, k + 2, n - 1), _e(n, n)])
_pair_row(5, 8, "A", lambda n: n >= 5, _ks(4, lambda n: n - 1),
          lambda n, p: (2, p[0]), ((1, 0), (1, 1)),
          lambda n, k, l: 5,
          lambda n, k, l: [_e(n, 1), _seg(n, 2, l - 2), _e(n, l - 1),
                           _seg(n, l, n - 1), _e(n, n)])


# tables 6-9: exceptional types, literal rows
def _literal_rows(table_id, family, n, rows):
    for row_id, (k, l), pq, rs_, rank, sigma_idx in rows:
        sigma = tuple(_mk(n, idxs) for idxs in sigma_idx)
        psi = tuple(sorted((pq, rs_)))

        def build(_n, params, _c=(k, l), _p=psi, _r=rank, _s=sigma):
            return _c, _p, _r, _s
        _row(table_id, row_id, family, lambda m, _n=n: m == _n, _fixed(()), build)


_UNITS4 = [(1,), (2,), (3,), (4,)]
_literal_rows(6, "F4", 4, [
    (1, (1, 3), (1, 0), (0, 1), 4, _UNITS4),
    (2, (1, 3), (0, 1), (1, 1), 4, _UNITS4),
    (3, (1, 4), (0, 1), (1, 1), 4, [(1, 2), (2, 3), (3,), (4,)]),
    (4, (2, 3), (1, 0), (1, 1), 4, _UNITS4),
    (5, (2, 3), (0, 1), (1, 1), 4, _UNITS4),
    (6, (2, 4), (0, 1), (1, 1), 4, _UNITS4),
    (7, (3, 4), (1, 0), (1, 1), 3, [(1,), (2, 3), (4,)]),
])

_literal_rows(7, "E6", 6, [
    (1, (1, 2), (1, 0), (0, 1), 5, [(1,), (2,), (3, 4), (4, 5), (5, 6)]),
    (2, (1, 2), (1, 0), (1, 1), 5, [(1, 3), (2,), (3, 4), (4, 5), (6,)]),
    (3, (1, 3), (0, 1), (1, 2), 5, [(1,), (2,), (3, 4), (4, 5), (5, 6)]),
    (4, (1, 5), (1, 0), (1, 1), 5, [(1,), (3,), (2, 4), (4, 5), (6,)]),
    (5, (1, 6), (1, 0), (0, 1), 5,
     [(1,), (2, 3, 4), (2, 4, 5), (3, 4, 5), (6,)]),
    (6, (1, 6), (1, 0), (1, 1), 5,
     [(1,), (2, 3, 4), (2, 4, 5), (3, 4, 5), (6,)]),
    (7, (2, 3), (1, 0), (0, 1), 5, [(1,), (2, 4), (3, 4), (5,), (6,)]),
    (8, (2, 3), (0, 1), (1, 2), 5, [(1,), (2, 4), (3,), (4, 5), (6,)]),
])

_E7_CHAIN = [(1, 3), (2,), (3, 4), (4, 5), (5, 6), (6, 7)]
_E7_FIVE = [(1,), (2, 4, 5), (3, 4, 5), (6,), (7,)]
_UNITS7 = [(i,) for i in range(1, 8)]
_literal_rows(8, "E7", 7, [
    (1, (1, 2), (1, 0), (0, 1), 6, _E7_CHAIN),
    (2, (1, 2), (0, 1), (1, 2), 6, _E7_CHAIN),
    (3, (1, 5), (1, 0), (1, 1), 7, _UNITS7),
    (4, (2, 3), (1, 0), (0, 1), 5, _E7_FIVE),
    (5, (2, 4), (0, 1), (1, 3), 7, _UNITS7),
    (6, (2, 5), (1, 0), (0, 1), 7, _UNITS7),
    (7, (2, 6), (0, 1), (1, 2), 5, _E7_FIVE),
    (8, (2, 7), (0, 1), (1, 1), 6, _E7_CHAIN),
    (9, (3, 7), (0, 1), (1, 1), 5, _E7_FIVE),
])

_E8_CHAIN = [(1,), (2,), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
_E8_FIVE = [(1,), (2, 4, 5, 6), (3, 4, 5, 6), (7,), (8,)]
_UNITS8 = [(i,) for i in range(1, 9)]
_literal_rows(9, "E8", 8, [
    (1, (1, 2), (1, 0), (0, 1), 7, _E8_CHAIN),
    (2, (1, 3), (0, 1), (1, 3), 7, _E8_CHAIN),
    (3, (1, 5), (1, 0), (1, 1), 8, _UNITS8),
    (4, (2, 3), (1, 0), (0, 1), 5, _E8_FIVE),
    (5, (2, 5), (1, 0), (0, 1), 8, _UNITS8),
    (6, (2, 5), (0, 1), (1, 3), 8, _UNITS8),
    (7, (2, 7), (0, 1), (1, 2), 5, _E8_FIVE),
    (8, (2, 8), (0, 1), (1, 1), 7, _E8_CHAIN),
    (9, (3, 8), (0, 1), (1, 1), 5, _E8_FIVE),
])


TABLE_IDS = tuple(range(1, 10))


def row_specs(table_id: Optional[int] = None,
              family: Optional[str] = None) -> list[RowSpec]:
    out = [r for r in _ROWS
           if (table_id is None or r.table_id == table_id)
           and (family is None or r.family == family)]
    return out


def instantiate_row(table_id: int, row_id: int, n: int,
                    params: Params = ()) -> RowInstance:
    """Concrete rank and spherical-root set of one table row."""
    for spec in _ROWS:
        if spec.table_id == table_id and spec.row_id == row_id:
            if not spec.n_ok(n):
                raise ParamsOutOfRange(f"table {table_id} row {row_id}: bad n={n}")
            if tuple(params) not in {tuple(p) for p in spec.params_for(n)}:
                raise ParamsOutOfRange(
                    f"table {table_id} row {row_id}: bad params {params} at n={n}")
            return _instance(spec, n, tuple(params))
    raise ParamsOutOfRange(f"no row {row_id} in table {table_id}")


def iter_instances(family: str, n: int,
                   tables: Optional[Iterable[int]] = None) -> Iterator[RowInstance]:
    """All concrete rows of a family at a given rank."""
    wanted = set(tables) if tables is not None else set(TABLE_IDS)
    for spec in _ROWS:
        if spec.family != family or spec.table_id not in wanted:
            continue
        if not spec.n_ok(n):
            continue
        for params in spec.params_for(n):
            yield _instance(spec, n, tuple(params))


# --- matching a reduced datum against the tables ----------------------------


@dataclass(frozen=True)
class MatchResult:
    table_id: int
    row_id: int
    family: str
    n: int
    params: Params
    iso: dict
    rank: int
    sigma: tuple[Vector, ...]  # pulled back to the matched datum's nodes


def _transform_datum(complement, psi, iso):
    """Push a (complement, psi) pair through a node relabeling."""
    new_nodes = sorted(iso[c] for c in complement)
    out_psi = []
    for lam in psi:
        weights = {iso[c]: x for c, x in zip(complement, lam)}
        out_psi.append(tuple(weights.get(a, 0) for a in new_nodes))
    return tuple(new_nodes), tuple(sorted(out_psi))


def _pullback(sigma_std: Vector, iso: dict, rank: int) -> Vector:
    return tuple(sigma_std[iso[a] - 1] for a in range(1, rank + 1))


def match_datum(H: SubgroupDatum, tables: Iterable[int]) -> MatchResult:
    """Find the table row equal to a reduced datum up to diagram relabeling.

    The datum must already be ambient-reduced with a connected diagram.
    All matches are located and must agree on the pulled-back rank and
    spherical-root set; the lowest (table, row) match is reported.
    """
    rs = H.rs
    n = rs.rank
    wanted = set(tables)
    all_nodes = tuple(range(1, n + 1))
    matches: list[MatchResult] = []
    for family in rsmod.FAMILIES:
        isos = rsmod.diagram_isomorphisms(rs, all_nodes, family, n)
        if not isos:
            continue
        instances = [inst for inst in iter_instances(family, n, wanted)]
        for iso in isos:
            complement_std, psi_std = _transform_datum(
                H.L.complement, H.psi, iso)
            for inst in instances:
                if inst.complement == complement_std and \
                        set(inst.psi) == set(psi_std):
                    sigma = tuple(sorted(
                        (_pullback(s, iso, n) for s in inst.sigma),
                        key=lambda v: (sum(v), v)))
                    matches.append(MatchResult(
                        inst.table_id, inst.row_id, family, n, inst.params,
                        iso, inst.rank, sigma))
    if not matches:
        kind = UnclassifiedLeaf if len(H.psi) <= 1 else UnclassifiedCase
        raise kind(f"no table row matches {H!r}")
    matches.sort(key=lambda m: (m.table_id, m.row_id,
                                tuple(sorted(m.iso.items()))))
    first = matches[0]
    for other in matches[1:]:
        if other.rank != first.rank or set(other.sigma) != set(first.sigma):
            raise UnclassifiedCase(
                f"inconsistent table matches for {H!r}: "
                f"{(first.table_id, first.row_id)} vs "
                f"{(other.table_id, other.row_id)}")
    return first


def match_leaf(H: SubgroupDatum) -> MatchResult:
    """Match a reduced single-active-root datum against table 1."""
    return match_datum(H, tables=(1,))


def dump_rows(table_id: int, n: Optional[int] = None,
              params: Optional[Params] = None) -> list[dict]:
    """Concrete row instantiations as JSON-ready dicts (CLI backend)."""
    out = []
    for spec in row_specs(table_id):
        if n is not None:
            candidate_ns = [n] if spec.n_ok(n) else []
        elif spec.family in rsmod._FIXED_RANK:
            candidate_ns = [rsmod._FIXED_RANK[spec.family]]
        else:
            candidate_ns = []  # parametric rows need an explicit rank
        for m in candidate_ns:
            for p in spec.params_for(m):
                if params is not None and tuple(params) != tuple(p):
                    continue
                inst = _instance(spec, m, tuple(p))
                out.append({
                    "table": inst.table_id,
                    "row": inst.row_id,
                    "family": inst.family,
                    "n": inst.n,
                    "params": list(inst.params),
                    "complement": list(inst.complement),
                    "psi": [list(v) for v in inst.psi],
                    "rank": inst.rank,
                    "sigma": [list(v) for v in inst.sigma],
                })
    return out
