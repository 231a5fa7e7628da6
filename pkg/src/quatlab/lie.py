"""Lie algebra actions of gl(2, H_C) on the function spaces.

Every action is the derivative of a fractional-linear group action with a
twist by powers of N(cZ+d) and N(a'-Zc'); differentiating along the four
block directions (A 0;0 0), (0 B;0 0), (0 0;C 0), (0 0;0 D) gives the
tables below.  Tr(M partial) denotes the scalar operator
sum_{ij} M_{ij} d/dz_{ij}.

Action names and targets:
    rho, rho_prime, rho1        scalar fields (twists 2/2, 0/0, 1/1)
    rho2, rho2_prime            2x2 matrix fields
    pi_dl / pi_dr               symmetric-pair 4-columns / 4-rows
    pi_l / pi_r                 spinor 2-columns / 2-rows
    pi_l0 / pi_r0               harmonic scalars (twists 1/0 and 0/1)

The group-level inversion (0 1; 1 0) and diagonal dilations are provided
for the actions where the classification tests use them.
"""

from __future__ import annotations

from quatlab.biquat import IDENTITY2
from quatlab.fields import FieldMatrix, ScalarField
from quatlab.scalars import qi

_VAR_INDEX = ((0, 1), (2, 3))  # z11 z12 / z21 z22


class LieElement:
    """Block matrix (A B; C D) of constant biquaternions."""

    __slots__ = ("A", "B", "C", "D")

    def __init__(self, A=None, B=None, C=None, D=None):
        zero = FieldMatrix.zero(2, 2)
        self.A = A if A is not None else zero
        self.B = B if B is not None else zero
        self.C = C if C is not None else zero
        self.D = D if D is not None else zero

    @classmethod
    def elementary(cls, block: str, i: int, j: int):
        m = FieldMatrix.zero(2, 2)
        m.entries[i][j] = ScalarField.one()
        return cls(**{block: m})

    @classmethod
    def all_elementary(cls):
        return [cls.elementary(b, i, j) for b in "ABCD" for i in range(2) for j in range(2)]

    def bracket(self, other: "LieElement") -> "LieElement":
        def mul(x, y):
            return x @ y

        A = mul(self.A, other.A) + mul(self.B, other.C) - (mul(other.A, self.A) + mul(other.B, self.C))
        B = mul(self.A, other.B) + mul(self.B, other.D) - (mul(other.A, self.B) + mul(other.B, self.D))
        C = mul(self.C, other.A) + mul(self.D, other.C) - (mul(other.C, self.A) + mul(other.D, self.C))
        D = mul(self.C, other.B) + mul(self.D, other.D) - (mul(other.C, self.B) + mul(other.D, self.D))
        return LieElement(A, B, C, D)


def tr_m_partial(M: FieldMatrix, f: ScalarField) -> ScalarField:
    """sum_{ij} M_{ij} d f/d z_{ij}."""
    out = ScalarField.zero()
    for i in range(2):
        for j in range(2):
            out = out + M.entries[i][j] * f.diff(_VAR_INDEX[i][j])
    return out


def _tr_m_partial_matrix(M: FieldMatrix, F: FieldMatrix) -> FieldMatrix:
    return F.map(lambda e: tr_m_partial(M, e))


_Z = FieldMatrix.z_matrix()


def _scalar_action(twist_left: int, twist_right: int):
    """Scalar action with twist N(cZ+d)^-tl N(a'-Zc')^-tr."""

    def act(X: LieElement, f: ScalarField) -> ScalarField:
        out = ScalarField.zero()
        if not X.A.is_zero():
            az = X.A @ _Z
            out = out - tr_m_partial(az, f) - f * X.A.trace().scale(qi(twist_right))
        if not X.B.is_zero():
            out = out - tr_m_partial(X.B, f)
        if not X.C.is_zero():
            zcz = _Z @ X.C @ _Z
            out = out + tr_m_partial(zcz, f) + f * (X.C @ _Z).trace().scale(qi(twist_left + twist_right))
        if not X.D.is_zero():
            zd = _Z @ X.D
            out = out + tr_m_partial(zd, f) + f * X.D.trace().scale(qi(twist_left))
        return out

    return act


_ACT_RHO = _scalar_action(2, 2)
_ACT_RHO_PRIME = _scalar_action(0, 0)
_ACT_RHO1 = _scalar_action(1, 1)
_ACT_PI_L0 = _scalar_action(1, 0)
_ACT_PI_R0 = _scalar_action(0, 1)


def _act_rho2(X: LieElement, F: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(2, 2)
    if not X.A.is_zero():
        az = X.A @ _Z
        out = out - _tr_m_partial_matrix(az, F) - F.scale(X.A.trace()) - (F @ X.A)
    if not X.B.is_zero():
        out = out - _tr_m_partial_matrix(X.B, F)
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        out = out + _tr_m_partial_matrix(zcz, F) + F.scale((_Z @ X.C).trace().scale(qi(2)))
        out = out + (X.C @ _Z @ F) + (F @ _Z @ X.C)
    if not X.D.is_zero():
        zd = _Z @ X.D
        out = out + _tr_m_partial_matrix(zd, F) + F.scale(X.D.trace()) + (X.D @ F)
    return out


def _act_rho2_prime(X: LieElement, F: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(2, 2)
    if not X.A.is_zero():
        az = X.A @ _Z
        out = out - _tr_m_partial_matrix(az, F) - F.scale(X.A.trace()) + (X.A @ F)
    if not X.B.is_zero():
        out = out - _tr_m_partial_matrix(X.B, F)
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        out = out + _tr_m_partial_matrix(zcz, F) + F.scale((_Z @ X.C).trace().scale(qi(2)))
        out = out - (_Z @ X.C @ F) - (F @ X.C @ _Z)
    if not X.D.is_zero():
        zd = _Z @ X.D
        out = out + _tr_m_partial_matrix(zd, F) + F.scale(X.D.trace()) - (F @ X.D)
    return out


def _kron_sum(M: FieldMatrix) -> FieldMatrix:
    """M (x) 1 + 1 (x) M as a 4x4 matrix."""
    return M.kron(IDENTITY2) + IDENTITY2.kron(M)


def _act_pi_dl(X: LieElement, col: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(4, 1)
    if not X.A.is_zero():
        out = out - col.map(lambda e: tr_m_partial(X.A @ _Z, e))
    if not X.B.is_zero():
        out = out - col.map(lambda e: tr_m_partial(X.B, e))
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        cz = X.C @ _Z
        out = out + col.map(lambda e: tr_m_partial(zcz, e) + e * cz.trace())
        out = out + (_kron_sum(cz) @ col)
    if not X.D.is_zero():
        zd = _Z @ X.D
        out = out + col.map(lambda e: tr_m_partial(zd, e) + e * X.D.trace())
        out = out + (_kron_sum(X.D) @ col)
    return out


def _act_pi_dr(X: LieElement, row: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(1, 4)
    if not X.A.is_zero():
        az = X.A @ _Z
        out = out - row.map(lambda e: tr_m_partial(az, e) + e * X.A.trace())
        out = out - (row @ _kron_sum(X.A))
    if not X.B.is_zero():
        out = out - row.map(lambda e: tr_m_partial(X.B, e))
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        zc = _Z @ X.C
        out = out + row.map(lambda e: tr_m_partial(zcz, e) + e * zc.trace())
        out = out + (row @ _kron_sum(zc))
    if not X.D.is_zero():
        out = out + row.map(lambda e: tr_m_partial(_Z @ X.D, e))
    return out


def _act_pi_l(X: LieElement, col: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(2, 1)
    if not X.A.is_zero():
        out = out - col.map(lambda e: tr_m_partial(X.A @ _Z, e))
    if not X.B.is_zero():
        out = out - col.map(lambda e: tr_m_partial(X.B, e))
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        cz = X.C @ _Z
        out = out + col.map(lambda e: tr_m_partial(zcz, e) + e * cz.trace()) + (cz @ col)
    if not X.D.is_zero():
        out = out + col.map(lambda e: tr_m_partial(_Z @ X.D, e) + e * X.D.trace()) + (X.D @ col)
    return out


def _act_pi_r(X: LieElement, row: FieldMatrix) -> FieldMatrix:
    out = FieldMatrix.zero(1, 2)
    if not X.A.is_zero():
        az = X.A @ _Z
        out = out - row.map(lambda e: tr_m_partial(az, e) + e * X.A.trace()) - (row @ X.A)
    if not X.B.is_zero():
        out = out - row.map(lambda e: tr_m_partial(X.B, e))
    if not X.C.is_zero():
        zcz = _Z @ X.C @ _Z
        zc = _Z @ X.C
        out = out + row.map(lambda e: tr_m_partial(zcz, e) + e * zc.trace()) + (row @ zc)
    if not X.D.is_zero():
        out = out + row.map(lambda e: tr_m_partial(_Z @ X.D, e))
    return out


_ACTIONS = {
    "rho": ("scalar", _ACT_RHO),
    "rho_prime": ("scalar", _ACT_RHO_PRIME),
    "rho1": ("scalar", _ACT_RHO1),
    "pi_l0": ("scalar", _ACT_PI_L0),
    "pi_r0": ("scalar", _ACT_PI_R0),
    "rho2": ("matrix", _act_rho2),
    "rho2_prime": ("matrix", _act_rho2_prime),
    "pi_dl": ("column4", _act_pi_dl),
    "pi_dr": ("row4", _act_pi_dr),
    "pi_l": ("column2", _act_pi_l),
    "pi_r": ("row2", _act_pi_r),
}

_KIND_CHECK = {
    "scalar": lambda f: isinstance(f, ScalarField),
    "matrix": lambda f: isinstance(f, FieldMatrix) and f.rows == 2 and f.cols == 2,
    "column4": lambda f: isinstance(f, FieldMatrix) and f.rows == 4 and f.cols == 1,
    "row4": lambda f: isinstance(f, FieldMatrix) and f.rows == 1 and f.cols == 4,
    "column2": lambda f: isinstance(f, FieldMatrix) and f.rows == 2 and f.cols == 1,
    "row2": lambda f: isinstance(f, FieldMatrix) and f.rows == 1 and f.cols == 2,
}


def act(name: str, X: LieElement, f):
    """Apply the named Lie algebra action of X to a field value."""
    if name not in _ACTIONS:
        raise ValueError(f"unknown action {name!r}")
    kind, fn = _ACTIONS[name]
    if not _KIND_CHECK[kind](f):
        raise TypeError("action/value kind mismatch")
    return fn(X, f)


def action_kind(name: str) -> str:
    return _ACTIONS[name][0]


def equivariance_defect(op, src: str, dst: str, X: LieElement, f):
    """op(act(src, X, f)) - act(dst, X, op(f)); zero certifies equivariance."""
    return op(act(src, X, f)) - act(dst, X, op(f))


def bracket_defect(name: str, X: LieElement, Y: LieElement, f):
    """act([X,Y]) - (act(X) act(Y) - act(Y) act(X)) applied to f."""
    lhs = act(name, X.bracket(Y), f)
    rhs = act(name, X, act(name, Y, f)) - act(name, Y, act(name, X, f))
    return lhs - rhs


# -- group-level elements used concretely by the classification ---------------


def act_inversion(name: str, f):
    """Action of the inversion (0 1; 1 0)."""
    if name == "rho_prime":
        return f.subs_inverse()
    if name == "rho":
        return f.subs_inverse().shift_n(-4)
    if name == "rho1":
        return f.subs_inverse().shift_n(-2)
    if name in ("pi_l0", "pi_r0"):
        return f.subs_inverse().shift_n(-1)
    if name == "rho2":
        zp = _Z.adjugate()
        return (zp @ f.subs_inverse() @ zp).shift_n(-4).scale(qi(-1))
    if name == "rho2_prime":
        return (_Z @ f.subs_inverse() @ _Z).shift_n(-2).scale(qi(-1))
    if name == "pi_dl":
        zp = _Z.adjugate()
        return (zp.kron(zp) @ f.subs_inverse()).shift_n(-3)
    if name == "pi_dr":
        zp = _Z.adjugate()
        return (f.subs_inverse() @ zp.kron(zp)).shift_n(-3)
    if name == "pi_l":
        return (_Z.adjugate() @ f.subs_inverse()).shift_n(-2)
    if name == "pi_r":
        return (f.subs_inverse() @ _Z.adjugate()).shift_n(-2).scale(qi(-1))
    raise ValueError(f"no inversion action for {name!r}")


def dilation_weight(name: str, f, s: int = 1):
    """Action of diag(lambda, 1)-type dilations reduces to degree grading;
    returns the field graded by (homogeneity + twist) * s (diagnostic)."""
    comps = f.homogeneous_components() if isinstance(f, ScalarField) else None
    if comps is None:
        raise ValueError("dilation grading implemented for scalars only")
    out = ScalarField.zero()
    for d, c in comps.items():
        out = out + c.scale(qi(d * s))
    return out
