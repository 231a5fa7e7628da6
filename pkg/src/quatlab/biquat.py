"""Constant biquaternion arithmetic: unit realization, Kronecker products,
the symmetric-pair annihilator, and the spinor twist maps sigma / sigma'.

Biquaternions are realized as 2x2 matrices (FieldMatrix with constant
entries); N(Z) is the determinant and Z^+ the adjugate, so that
Z Z^+ = Z^+ Z = N(Z) Id.
"""

from __future__ import annotations

from quatlab.fields import FieldMatrix, ScalarField
from quatlab.scalars import qi


def _const(c):
    return ScalarField.const(c)


def quaternion_units():
    """The standard realization of the quaternion units as 2x2 matrices."""
    one, mone = qi(1), qi(-1)
    mi, pi_ = qi(0, -1), qi(0, 1)
    e0 = FieldMatrix(2, 2, [[_const(one), _const(qi(0))], [_const(qi(0)), _const(one)]])
    e1 = FieldMatrix(2, 2, [[_const(qi(0)), _const(mi)], [_const(mi), _const(qi(0))]])
    e2 = FieldMatrix(2, 2, [[_const(qi(0)), _const(mone)], [_const(one), _const(qi(0))]])
    e3 = FieldMatrix(2, 2, [[_const(mi), _const(qi(0))], [_const(qi(0)), _const(pi_)]])
    return e0, e1, e2, e3


E0, E1, E2, E3 = quaternion_units()
E_UNITS = (E0, E1, E2, E3)


def bq_from_components(c0, c1, c2, c3) -> FieldMatrix:
    """c0 e0 + c1 e1 + c2 e2 + c3 e3 with Gaussian-rational components."""
    out = FieldMatrix.zero(2, 2)
    for c, e in zip((c0, c1, c2, c3), E_UNITS):
        out = out + e.scale(c)
    return out


def bq_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    return a @ b

def bq_conjugate(a: FieldMatrix) -> FieldMatrix:
    return a.adjugate()


def bq_norm(a: FieldMatrix) -> ScalarField:
    return a.det2()


def antisym_tensor_sum() -> FieldMatrix:
    """sum_i e_i (x) e_i; annihilates every 4-vector with equal middle entries."""
    out = FieldMatrix.zero(4, 4)
    for e in E_UNITS:
        out = out + e.kron(e)
    return out


def spinor_dagger_col(col: FieldMatrix) -> FieldMatrix:
    """(s1, s2)^T -> (s2, -s1), a column-to-row map."""
    assert col.rows == 2 and col.cols == 1
    return FieldMatrix.row([col.entries[1][0], -col.entries[0][0]])


def spinor_dagger_row(row: FieldMatrix) -> FieldMatrix:
    """(s1', s2') -> (-s2', s1')^T, a row-to-column map."""
    assert row.rows == 1 and row.cols == 2
    return FieldMatrix.column([-row.entries[0][1], row.entries[0][0]])


def sigma(m: FieldMatrix) -> FieldMatrix:
    """2x2 matrix -> 4-column (m12, -m11, m22, -m21)^T."""
    assert m.rows == 2 and m.cols == 2
    return FieldMatrix.column([m.entries[0][1], -m.entries[0][0], m.entries[1][1], -m.entries[1][0]])


def sigma_prime(m: FieldMatrix) -> FieldMatrix:
    """2x2 matrix -> 4-row (-m21, -m22, m11, m12)."""
    assert m.rows == 2 and m.cols == 2
    return FieldMatrix.row([-m.entries[1][0], -m.entries[1][1], m.entries[0][0], m.entries[0][1]])


def sigma_inverse(col: FieldMatrix) -> FieldMatrix:
    assert col.rows == 4 and col.cols == 1
    c = col.column_entries()
    return FieldMatrix(2, 2, [[-c[1], c[0]], [-c[3], c[2]]])


def sigma_prime_inverse(row: FieldMatrix) -> FieldMatrix:
    assert row.rows == 1 and row.cols == 4
    r = row.row_entries()
    return FieldMatrix(2, 2, [[r[2], r[3]], [-r[0], -r[1]]])


IDENTITY2 = FieldMatrix.identity(2)
