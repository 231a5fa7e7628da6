"""Named basis families for the function spaces.

All indices are doubled integers (2l, 2m, 2n), optionally preceded by an
integer power k of N; malformed parities raise, indices outside a family's
listed range give the zero value of the right shape.

Scalar-space basis: N^k * t^l_{n m}.

Symmetric-pair (doubly regular) bases, 4-columns / 4-rows:
    F, Fp   (columns)      G, Gp   (rows)

Matrix families spanning the biharmonic core M and the K-types of the
matrix spaces (2x2):
    Ft, Ftp, Gt, Gtp, Ht, Htp, It, Itp     (M families; It/Itp carry the
                                            N-correction that makes Mx = 0)
    bF, bG, bH, bFp, bGp, bHp, NNZp        (kernel basis on the Tr o
                                            partial_plus side; bH/bHp are
                                            k-indexed)
    Ik (k-indexed), Jt                     (remaining K-types of the
                                            matrix space on the Mx side)
    NinvZ                                  N^-1 Z, the one-dimensional piece

Spinor bases (2-columns / 2-rows): vp, vm, vpp, vpm.
"""

from __future__ import annotations

from fractions import Fraction

from quatlab.diffops import (
    apply_partial_left,
    apply_partial_right,
    maxwell,
    trace_partial_box,
)
from quatlab.fields import FieldMatrix, ScalarField
from quatlab.scalars import qi
from quatlab.tcoeff import t_polynomial


def _t(twol, twon, twom, inverted=False):
    f = t_polynomial(twol, twon, twom)
    return f.subs_inverse() if inverted else f


def _check_parity(twol, *idx):
    for v in idx:
        if (v - twol) % 2:
            raise ValueError("index parity mismatch")


def _block2(twol, twon0, twom0, coeff_fn, inverted=False, npow=0):
    """2x2 matrix with (i,j) entry coeff_fn(i,j) * t^l_{n0+i, m0+j}."""
    out = FieldMatrix(2, 2)
    for i in range(2):
        for j in range(2):
            c = coeff_fn(i, j)
            if c:
                out.entries[i][j] = _t(twol, twon0 + 2 * i, twom0 + 2 * j, inverted).scale(Fraction(c))
    if npow:
        out = out.shift_n(npow)
    return out


# -- doubly regular columns / rows ---------------------------------------------


def fam_F(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or abs(twom) > twol + 2 or abs(twon) > twol:
        return FieldMatrix.zero(4, 1)
    lm = Fraction(twol - twom, 2)  # l - m
    lp = Fraction(twol + twom, 2)  # l + m
    return FieldMatrix.column(
        [
            _t(twol, twon, twom + 2).scale(lm * (lm + 1)),
            _t(twol, twon, twom).scale((lm + 1) * (lp + 1)),
            _t(twol, twon, twom).scale((lm + 1) * (lp + 1)),
            _t(twol, twon, twom - 2).scale(lp * (lp + 1)),
        ]
    )


def fam_Fp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or abs(twom) > twol + 2 or abs(twon) > twol:
        return FieldMatrix.zero(4, 1)
    ln = Fraction(twol - twon, 2)
    lp = Fraction(twol + twon, 2)
    col = FieldMatrix.column(
        [
            _t(twol + 2, twon - 2, twom, True).scale((ln + 1) * (ln + 2)),
            _t(twol + 2, twon, twom, True).scale((ln + 1) * (lp + 1)),
            _t(twol + 2, twon, twom, True).scale((ln + 1) * (lp + 1)),
            _t(twol + 2, twon + 2, twom, True).scale((lp + 1) * (lp + 2)),
        ]
    )
    return col.shift_n(-1)


def fam_G(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or abs(twom) > twol + 2 or abs(twon) > twol:
        return FieldMatrix.zero(1, 4)
    return FieldMatrix.row(
        [
            _t(twol, twom + 2, twon),
            _t(twol, twom, twon),
            _t(twol, twom, twon),
            _t(twol, twom - 2, twon),
        ]
    )


def fam_Gp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or abs(twom) > twol + 2 or abs(twon) > twol:
        return FieldMatrix.zero(1, 4)
    row = FieldMatrix.row(
        [
            _t(twol + 2, twom, twon - 2, True),
            _t(twol + 2, twom, twon, True),
            _t(twol + 2, twom, twon, True),
            _t(twol + 2, twom, twon + 2, True),
        ]
    )
    return row.shift_n(-1)


# -- the biharmonic core M ------------------------------------------------------


def construct_M_element(F_d: FieldMatrix, d: int) -> FieldMatrix:
    """F_d + N/(d+1) (partial F_d partial)^+ for harmonic homogeneous F_d.

    Checks Mx = 0 and Tr(partial box .) = 0 on the result; d = -1 is
    unreachable for valid input but guarded.
    """
    if d == -1:
        raise ValueError("resonant degree")
    if not F_d.map(lambda e: e.laplacian()).is_zero():
        raise ValueError("input is not harmonic")
    dfd = apply_partial_right(apply_partial_left(F_d))
    out = F_d + dfd.adjugate().shift_n(1).scale(qi(Fraction(1, d + 1)))
    if not maxwell(out).is_zero() or not trace_partial_box(out).is_zero():
        raise AssertionError("completion left the biharmonic core")
    return out


def fam_Ft(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol - 2 <= twom <= twol) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    return _block2(
        twol,
        twon,
        twom,
        lambda i, j: ((lp + 1) if j == 0 else -lm) * ((ln) if i == 0 else (lq + 1)),
    )


def fam_Gt(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    return _block2(twol, twon, twom, lambda i, j: 1 if i == 0 else -1)


def fam_Ht(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or not (-twol - 2 <= twom <= twol) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    return _block2(
        twol,
        twon,
        twom,
        lambda i, j: ((lp + 1) if j == 0 else -lm) * (1 if i == 0 else -1),
    )


def fam_Htp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    m = FieldMatrix(
        2,
        2,
        [
            [_t(twol, twon + 2, twom + 2, True).scale(lq + 1), _t(twol, twon, twom + 2, True).scale(-ln)],
            [_t(twol, twon + 2, twom, True).scale(-(lq + 1)), _t(twol, twon, twom, True).scale(ln)],
        ],
    )
    return m.shift_n(-1)


def fam_Ftp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol - 2 <= twom <= twol) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    m = FieldMatrix(
        2,
        2,
        [
            [
                _t(twol, twon + 2, twom + 2, True).scale(lm * (lq + 1)),
                _t(twol, twon, twom + 2, True).scale(-lm * ln),
            ],
            [
                _t(twol, twon + 2, twom, True).scale((lp + 1) * (lq + 1)),
                _t(twol, twon, twom, True).scale(-(lp + 1) * ln),
            ],
        ],
    )
    return m.shift_n(-1)


def fam_Gtp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    m = FieldMatrix(
        2,
        2,
        [
            [_t(twol, twon + 2, twom + 2, True), _t(twol, twon, twom + 2, True)],
            [-_t(twol, twon + 2, twom, True), -_t(twol, twon, twom, True)],
        ],
    )
    return m.shift_n(-1)


def fam_It_harm(twol, twom, twon) -> FieldMatrix:
    """Harmonic part of the It completion family."""
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    return _block2(twol, twon, twom, lambda i, j: ln if i == 0 else lq + 1)


def fam_It(twol, twom, twon) -> FieldMatrix:
    harm = fam_It_harm(twol, twom, twon)
    if harm.is_zero():
        return harm
    return construct_M_element(harm, twol)


def fam_Itp_harm(twol, twom, twon) -> FieldMatrix:
    """Harmonic part of the Itp completion family."""
    _check_parity(twol, twom, twon)
    if twol < 0 or not (-twol - 2 <= twom <= twol) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    return FieldMatrix(
        2,
        2,
        [
            [_t(twol, twon + 2, twom + 2, True).scale(lm), _t(twol, twon, twom + 2, True).scale(lm)],
            [_t(twol, twon + 2, twom, True).scale(lp + 1), _t(twol, twon, twom, True).scale(lp + 1)],
        ],
    ).shift_n(-1)


def fam_Itp(twol, twom, twon) -> FieldMatrix:
    harm = fam_Itp_harm(twol, twom, twon)
    if harm.is_zero():
        return harm
    return construct_M_element(harm, -twol - 2)


def fam_NinvZ() -> FieldMatrix:
    return FieldMatrix.z_matrix().shift_n(-1)


# -- K-type families of the matrix space on the Mx side -------------------------


def fam_Ik(k, twol, twom, twon) -> FieldMatrix:
    """k-indexed completion family; at 2l = -1 it degenerates to k N^{k-1} Z."""
    if k == 0:
        raise ValueError("k must be nonzero")
    _check_parity(twol, twom, twon)
    if twol < -1 or not (-twol - 2 <= twom <= twol) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    first = _block2(
        twol,
        twon,
        twom,
        lambda i, j: ((lp + 1) if j == 0 else -lm) * (1 if i == 0 else -1),
        npow=k,
    ).scale(qi(twol + k + 2))
    second = _block2(
        twol + 2,
        twon,
        twom,
        lambda i, j: (ln + 1) if i == 0 else (lq + 2),
        npow=k - 1,
    ).scale(qi(k))
    return first + second


def fam_Jt(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    return _block2(twol, twon, twom, lambda i, j: ln if i == 0 else lq + 1, npow=-1)


# -- kernel basis on the Tr o partial_plus side ---------------------------------


def fam_bF(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol - 2 <= twom <= twol) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    return FieldMatrix(
        2,
        2,
        [
            [_t(twol, twon + 2, twom + 2).scale(-lm * (lq + 1)), _t(twol, twon, twom + 2).scale(lm * ln)],
            [_t(twol, twon + 2, twom).scale(-(lp + 1) * (lq + 1)), _t(twol, twon, twom).scale((lp + 1) * ln)],
        ],
    )


def fam_bG(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    return FieldMatrix(
        2,
        2,
        [
            [-_t(twol, twon + 2, twom + 2), -_t(twol, twon, twom + 2)],
            [_t(twol, twon + 2, twom), _t(twol, twon, twom)],
        ],
    )


def fam_bH(k, twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or not (-twol - 2 <= twom <= twol) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    first = FieldMatrix(
        2,
        2,
        [
            [_t(twol, twon + 2, twom + 2).scale(lm), _t(twol, twon, twom + 2).scale(lm)],
            [_t(twol, twon + 2, twom).scale(lp + 1), _t(twol, twon, twom).scale(lp + 1)],
        ],
    ).shift_n(k).scale(qi(Fraction(twol + k + 2, twol + 1)))
    second = FieldMatrix(
        2,
        2,
        [
            [_t(twol + 2, twon + 2, twom + 2).scale(lq + 2), _t(twol + 2, twon, twom + 2).scale(-(ln + 1))],
            [_t(twol + 2, twon + 2, twom).scale(-(lq + 2)), _t(twol + 2, twon, twom).scale(ln + 1)],
        ],
    ).shift_n(k - 1).scale(qi(Fraction(-k, twol + 3)))
    return first + second


def fam_bFp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol - 2 <= twom <= twol) or not (-twol <= twon <= twol - 2):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    return _block2(
        twol,
        twon,
        twom,
        lambda i, j: (-(lp + 1) if j == 0 else lm) * (ln if i == 0 else lq + 1),
        inverted=True,
        npow=-1,
    )


def fam_bGp(twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 1 or not (-twol <= twom <= twol - 2) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    return _block2(twol, twon, twom, lambda i, j: -1 if i == 0 else 1, inverted=True, npow=-1)


def fam_bHp(k, twol, twom, twon) -> FieldMatrix:
    _check_parity(twol, twom, twon)
    if twol < 0 or not (-twol - 2 <= twom <= twol) or not (-twol - 2 <= twon <= twol):
        return FieldMatrix.zero(2, 2)
    lm, lp = Fraction(twol - twom, 2), Fraction(twol + twom, 2)
    ln, lq = Fraction(twol - twon, 2), Fraction(twol + twon, 2)
    first = _block2(
        twol,
        twon,
        twom,
        lambda i, j: ((-(lp + 1)) if j == 0 else lm) * (1 if i == 0 else -1),
        inverted=True,
        npow=k - 1,
    ).scale(qi(Fraction(k + 1, twol + 1)))
    second = _block2(
        twol + 2,
        twon,
        twom,
        lambda i, j: (ln + 1) if i == 0 else (lq + 2),
        inverted=True,
        npow=k,
    ).scale(qi(Fraction(-(twol - k + 1), twol + 3)))
    return first + second


def fam_NNZp() -> FieldMatrix:
    return FieldMatrix.z_matrix().adjugate().shift_n(-2)


# -- spinor bases ---------------------------------------------------------------


def fam_vp(twol, twom, twon) -> FieldMatrix:
    if (twom - twol) % 2 == 0 or (twon - twol) % 2:
        raise ValueError("index parity mismatch")
    if twol < 0 or abs(twom) > twol + 1 or abs(twon) > twol:
        return FieldMatrix.zero(2, 1)
    return FieldMatrix.column(
        [
            _t(twol, twon, twom + 1).scale(Fraction(twol - twom + 1, 2)),
            _t(twol, twon, twom - 1).scale(Fraction(twol + twom + 1, 2)),
        ]
    )


def fam_vm(twol, twom, twon) -> FieldMatrix:
    if (twom - twol) % 2 == 0 or (twon - twol) % 2:
        raise ValueError("index parity mismatch")
    if twol < 1 or abs(twom) > twol - 1 or abs(twon) > twol:
        return FieldMatrix.zero(2, 1)
    return FieldMatrix.column(
        [
            _t(twol, twom - 1, twon, True).scale(Fraction(twol - twom + 1, 2)),
            _t(twol, twom + 1, twon, True).scale(Fraction(twol + twom + 1, 2)),
        ]
    ).shift_n(-1)


def fam_vpp(twol, twom, twon) -> FieldMatrix:
    if (twom - twol) % 2 == 0 or (twon - twol) % 2:
        raise ValueError("index parity mismatch")
    if twol < 1 or abs(twom) > twol - 1 or abs(twon) > twol:
        return FieldMatrix.zero(1, 2)
    return FieldMatrix.row([_t(twol - 1, twon + 1, twom), _t(twol - 1, twon - 1, twom)])


def fam_vpm(twol, twom, twon) -> FieldMatrix:
    if (twom - twol) % 2 == 0 or (twon - twol) % 2:
        raise ValueError("index parity mismatch")
    if twol < 0 or abs(twom) > twol + 1 or abs(twon) > twol:
        return FieldMatrix.zero(1, 2)
    return FieldMatrix.row(
        [_t(twol + 1, twom, twon - 1, True), _t(twol + 1, twom, twon + 1, True)]
    ).shift_n(-1)


_FAMILIES = {
    "F": fam_F,
    "Fp": fam_Fp,
    "G": fam_G,
    "Gp": fam_Gp,
    "Ft": fam_Ft,
    "Ftp": fam_Ftp,
    "Gt": fam_Gt,
    "Gtp": fam_Gtp,
    "Ht": fam_Ht,
    "Htp": fam_Htp,
    "It": fam_It,
    "Itp": fam_Itp,
    "Ik": fam_Ik,
    "Jt": fam_Jt,
    "bF": fam_bF,
    "bG": fam_bG,
    "bH": fam_bH,
    "bFp": fam_bFp,
    "bGp": fam_bGp,
    "bHp": fam_bHp,
}


def family(name: str, *args):
    """Dispatch fam(<name>, [k,] 2l, 2m, 2n); see module docstring for names."""
    if name == "NinvZ":
        return fam_NinvZ()
    if name == "NNZp":
        return fam_NNZp()
    if name in ("vp", "vm", "vpp", "vpm"):
        return {"vp": fam_vp, "vm": fam_vm, "vpp": fam_vpp, "vpm": fam_vpm}[name](*args)
    fn = _FAMILIES.get(name)
    if fn is None:
        raise ValueError(f"unknown family {name!r}")
    return fn(*args)


# -- derivative identity report --------------------------------------------------


def del_A_identities(name: str, twol, twom, twon) -> dict:
    """Check the one-sided derivative relations of the M families.

    For the tilde families: left/right application of partial either
    annihilates or reproduces the same element times (2l+1) Z^-1.
    Returns {relation: bool}.
    """
    report = {}
    zinv = FieldMatrix.z_matrix().adjugate().shift_n(-1)
    c = qi(twol + 1)

    if name == "NinvZ":
        v = fam_NinvZ()
        ninv = FieldMatrix.identity(2).scale(ScalarField.n_power(-1))
        report["left"] = (apply_partial_left(v) - ninv).is_zero()
        report["right"] = (apply_partial_right(v) - ninv).is_zero()
        return report

    v = family(name, twol, twom, twon)
    left = apply_partial_left(v)
    right = apply_partial_right(v)
    if name == "Ft":
        report["left"] = (left - (zinv @ v).scale(c)).is_zero()
        report["right"] = right.is_zero()
    elif name == "Ftp":
        report["left"] = (left + (zinv @ v).scale(c)).is_zero()
        report["right"] = right.is_zero()
    elif name == "Gt":
        report["left"] = left.is_zero()
        report["right"] = (right - (v @ zinv).scale(c)).is_zero()
    elif name == "Gtp":
        report["left"] = left.is_zero()
        report["right"] = (right + (v @ zinv).scale(c)).is_zero()
    elif name in ("Ht", "Htp"):
        report["left"] = left.is_zero()
        report["right"] = right.is_zero()
    elif name == "It":
        # the one-sided relations hold on the harmonic parts, which is how
        # they are consumed (the tau projections kill non-harmonic parts)
        h = fam_It_harm(twol, twom, twon)
        report["left"] = (apply_partial_left(h) - (zinv @ h).scale(c)).is_zero()
        report["right"] = (apply_partial_right(h) - (h @ zinv).scale(c)).is_zero()
    elif name == "Itp":
        h = fam_Itp_harm(twol, twom, twon)
        report["left"] = (apply_partial_left(h) + (zinv @ h).scale(c)).is_zero()
        report["right"] = (apply_partial_right(h) + (h @ zinv).scale(c)).is_zero()
    else:
        raise ValueError(f"no derivative identities recorded for {name!r}")
    return report
