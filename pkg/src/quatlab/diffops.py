"""Differential operators of the quaternionic chain complex.

With partial_{ij} = d/dz_{ij}, the two operator matrices are

    partial   = [ d11  d21 ]        partial_plus = [  d22  -d21 ]
                [ d12  d22 ]                       [ -d12   d11 ]

so that nabla = 2 partial, nabla_plus = 2 partial_plus and
box = 4 (d11 d22 - d12 d21).  The Maxwell operator is

    Mx F = nabla F nabla - box F^+ = 4 (partial F partial - partial partial_plus F^+),

with matrix products read as operator-matrix times matrix of fields.  The
chain complex is partial_plus -> Mx -> Tr o partial_plus with vanishing
consecutive compositions.
"""

from __future__ import annotations

from fractions import Fraction

from quatlab.biquat import E_UNITS, IDENTITY2
from quatlab.fields import FieldMatrix, ScalarField
from quatlab.scalars import qi

# entries of the operator matrices as variable indices (z11 z12 z21 z22 = 0..3)
_PARTIAL_VAR = ((0, 2), (1, 3))  # partial[i][j] differentiates by this index
_PARTIAL_PLUS = ((3, 2), (1, 0))  # with signs below
_PARTIAL_PLUS_SIGN = ((1, -1), (-1, 1))


def partial_of_scalar(f: ScalarField) -> FieldMatrix:
    """The 2x2 matrix (partial f): [[d11 f, d21 f], [d12 f, d22 f]]."""
    return FieldMatrix(2, 2, [[f.diff(0), f.diff(2)], [f.diff(1), f.diff(3)]])


def partial_plus_of_scalar(f: ScalarField) -> FieldMatrix:
    return FieldMatrix(2, 2, [[f.diff(3), -f.diff(2)], [-f.diff(1), f.diff(0)]])


def apply_partial_left(F: FieldMatrix) -> FieldMatrix:
    """Operator-matrix product: (partial F)_{ij} = sum_k partial_{ik} F_{kj}."""
    out = FieldMatrix(2, F.cols)
    for j in range(F.cols):
        out.entries[0][j] = F.entries[0][j].diff(0) + F.entries[1][j].diff(2)
        out.entries[1][j] = F.entries[0][j].diff(1) + F.entries[1][j].diff(3)
    return out


def apply_partial_right(F: FieldMatrix) -> FieldMatrix:
    """(F partial)_{ij} = sum_k F_{ik} partial_{kj}."""
    out = FieldMatrix(F.rows, 2)
    for i in range(F.rows):
        out.entries[i][0] = F.entries[i][0].diff(0) + F.entries[i][1].diff(1)
        out.entries[i][1] = F.entries[i][0].diff(2) + F.entries[i][1].diff(3)
    return out


def apply_partial_plus_left(F: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix(2, F.cols)
    for j in range(F.cols):
        out.entries[0][j] = F.entries[0][j].diff(3) - F.entries[1][j].diff(2)
        out.entries[1][j] = -F.entries[0][j].diff(1) + F.entries[1][j].diff(0)
    return out


def apply_partial_plus_right(F: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix(F.rows, 2)
    for i in range(F.rows):
        out.entries[i][0] = F.entries[i][0].diff(3) - F.entries[i][1].diff(1)
        out.entries[i][1] = -F.entries[i][0].diff(2) + F.entries[i][1].diff(0)
    return out


def box_scalar(f: ScalarField) -> ScalarField:
    return f.laplacian()


def box_matrix(F: FieldMatrix) -> FieldMatrix:
    return F.map(lambda e: e.laplacian())


def maxwell(F: FieldMatrix) -> FieldMatrix:
    """Mx F = 4 (partial F partial - partial partial_plus F^+)."""
    a = apply_partial_right(apply_partial_left(F))
    b = apply_partial_left(apply_partial_plus_left(F.adjugate()))
    return (a - b).scale(qi(4))


def trace_partial_plus(F: FieldMatrix) -> ScalarField:
    """Tr(partial_plus F) = d22 F11 - d21 F21 - d12 F12 + d11 F22."""
    return (
        F.entries[0][0].diff(3)
        - F.entries[1][0].diff(2)
        - F.entries[0][1].diff(1)
        + F.entries[1][1].diff(0)
    )


def trace_partial_box(F: FieldMatrix) -> ScalarField:
    """Tr(partial (box F)); with Mx this carves out the biharmonic core."""
    boxed = box_matrix(F)
    return apply_partial_left(boxed).trace()


def box_box(f: ScalarField) -> ScalarField:
    return f.laplacian().laplacian()


def degree_operator(f):
    if isinstance(f, FieldMatrix):
        return f.map(lambda e: e.degree_op())
    return f.degree_op()


def deg_shift_inverse(f, d: int):
    """(deg + d)^-1 by homogeneous-component scaling.

    Errors with 'resonant component' when a nonzero component of degree -d
    is present.
    """
    if isinstance(f, FieldMatrix):
        return f.map(lambda e: deg_shift_inverse(e, d))
    out = ScalarField.zero()
    for deg, comp in f.homogeneous_components().items():
        if deg + d == 0:
            raise ValueError("resonant component")
        out = out + comp.scale(qi(Fraction(1, deg + d)))
    return out


# -- x-coordinate derivatives and tensor-slot operators -----------------------

# z11 = x0 - i x3, z12 = -i x1 - x2, z21 = -i x1 + x2, z22 = x0 + i x3


def x_derivative(f: ScalarField, i: int) -> ScalarField:
    if i == 0:
        return f.diff(0) + f.diff(3)
    if i == 1:
        return (f.diff(1) + f.diff(2)).scale(qi(0, -1))
    if i == 2:
        return -f.diff(1) + f.diff(2)
    if i == 3:
        return (f.diff(3) - f.diff(0)).scale(qi(0, 1))
    raise ValueError(i)


_NABLA_SIGNS = (1, -1, -1, -1)  # nabla = e0 dx0 - e1 dx1 - e2 dx2 - e3 dx3
_NABLA_PLUS_SIGNS = (1, 1, 1, 1)


def _slot_op(col: FieldMatrix, signs, left_units, right_units) -> FieldMatrix:
    out = FieldMatrix.zero(col.rows, col.cols)
    for i in range(4):
        mat = left_units[i].kron(right_units[i])
        term = (mat @ col.map(lambda e, i=i: x_derivative(e, i))).scale(qi(signs[i]))
        out = out + term
    return out


def nabla_plus_slot1(col: FieldMatrix) -> FieldMatrix:
    """(nabla_plus (x) 1) f for a 4-column f."""
    return _slot_op(col, _NABLA_PLUS_SIGNS, E_UNITS, (IDENTITY2,) * 4)


def nabla_plus_slot2(col: FieldMatrix) -> FieldMatrix:
    """(1 (x) nabla_plus) f for a 4-column f."""
    return _slot_op(col, _NABLA_PLUS_SIGNS, (IDENTITY2,) * 4, E_UNITS)


def row_nabla_plus_slot1(row: FieldMatrix) -> FieldMatrix:
    """g (nabla_plus (x) 1) for a 4-row g (right action)."""
    out = FieldMatrix.zero(1, 4)
    for i in range(4):
        mat = E_UNITS[i].kron(IDENTITY2)
        out = out + (row.map(lambda e, i=i: x_derivative(e, i)) @ mat)
    return out


def row_nabla_plus_slot2(row: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(1, 4)
    for i in range(4):
        mat = IDENTITY2.kron(E_UNITS[i])
        out = out + (row.map(lambda e, i=i: x_derivative(e, i)) @ mat)
    return out


def nabla_tensor_nabla(f: ScalarField) -> FieldMatrix:
    """(nabla (x) nabla) f as a 4x4 tensor field (equals 4 (partial (x) partial) f)."""
    out = FieldMatrix.zero(4, 4)
    for i in range(4):
        for j in range(4):
            c = qi(_NABLA_SIGNS[i] * _NABLA_SIGNS[j])
            mat = E_UNITS[i].kron(E_UNITS[j])
            out = out + mat.scale(x_derivative(x_derivative(f, i), j)).scale(c)
    return out


def partial_tensor_partial(f: ScalarField) -> FieldMatrix:
    """(partial (x) partial) f: Kronecker square of the operator matrix."""
    pmat = partial_of_scalar(f)  # inner partial applied first
    out = FieldMatrix.zero(4, 4)
    var_for = ((0, 2), (1, 3))
    for i in range(2):
        for j in range(2):
            block = pmat.map(lambda e, v=var_for[i][j]: e.diff(v))
            for k in range(2):
                for l in range(2):
                    out.entries[2 * i + k][2 * j + l] = block.entries[k][l]
    return out


# -- regularity predicates -----------------------------------------------------


def is_left_regular(F: FieldMatrix) -> bool:
    """nabla_plus F = 0 (2x2 matrix or 2-column, S-valued)."""
    return apply_partial_plus_left(F).is_zero()


def is_right_regular(F: FieldMatrix) -> bool:
    return apply_partial_plus_right(F).is_zero()


def is_doubly_left_regular(col: FieldMatrix) -> bool:
    """S (.) S valued 4-column annihilated by both slot operators."""
    from quatlab.fields import is_symmetric_pair_valued

    if not is_symmetric_pair_valued(col):
        raise ValueError("not symmetric-spinor valued")
    return nabla_plus_slot1(col).is_zero() and nabla_plus_slot2(col).is_zero()


def is_doubly_right_regular(row: FieldMatrix) -> bool:
    from quatlab.fields import is_symmetric_pair_valued

    if not is_symmetric_pair_valued(row):
        raise ValueError("not symmetric-spinor valued")
    return row_nabla_plus_slot1(row).is_zero() and row_nabla_plus_slot2(row).is_zero()
