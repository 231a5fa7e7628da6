"""Irreducible-component structure of the scalar and matrix spaces.

Membership is decided on the canonical bases (N^k t^l for scalars, the
named families for matrices), never by generic invariant-subspace
computation: the classification theorems are lattice-region statements in
the (k, 2l) plane.

Region dictionary (scalar space, twisted action 'rho'):
    plus   k >= 0                 minus  k <= -(2l+4)
    iplus  k >= -(2l+1)           iminus k <= -3
    middle -(2l+1) <= k <= -3
and for the untwisted action 'rho_prime':
    origin (0,0); biplus 0 <= k <= 1; biminus -1 <= 2l+k <= 0;
    plus k >= 0; minus k <= -2l; iplus k >= -(2l+1); iminus k <= 1;
    middle -(2l+1) <= k <= 1.
"""

from __future__ import annotations

from quatlab.biquat import sigma, sigma_prime
from quatlab.diffops import apply_partial_left, apply_partial_right
from quatlab.families import (
    fam_bF,
    fam_bG,
    fam_bH,
    fam_F,
    fam_Fp,
    fam_Ft,
    fam_Ftp,
    fam_G,
    fam_Gp,
    fam_Gt,
    fam_Gtp,
    fam_Ht,
    fam_Htp,
    fam_Ik,
    fam_It_harm,
    fam_Itp_harm,
    fam_Jt,
    fam_NNZp,
)
from quatlab.fields import FieldMatrix, ScalarField
from quatlab.linalg import expand_matrix_in_basis
from quatlab.scalars import qi

# -- lattice classification ----------------------------------------------------


def sh_invariant_subspaces(k: int, twol: int, variant: str = "sh"):
    """Invariant subspaces containing the basis point N^k t^l."""
    if twol < 0:
        raise ValueError("twol must be >= 0")
    out = set()
    if variant == "sh":
        if k >= 0:
            out.add("Sh+")
        if k <= -(twol + 4):
            out.add("Sh-")
        if k >= -(twol + 1):
            out.add("I+")
        if k <= -3:
            out.add("I-")
        if -(twol + 1) <= k <= -3:
            out.add("J")
    elif variant == "sh_prime":
        if (k, twol) == (0, 0):
            out.add("I'0")
        if 0 <= k <= 1:
            out.add("BH+")
        if -1 <= twol + k <= 0:
            out.add("BH-")
        if k >= 0:
            out.add("Sh+")
        if k <= -twol:
            out.add("Sh'-")
        if k >= -(twol + 1):
            out.add("I'+")
        if k <= 1:
            out.add("I'-")
        if -(twol + 1) <= k <= 1:
            out.add("J'")
    else:
        raise ValueError(variant)
    return out


def sh_component(k: int, twol: int, variant: str = "sh") -> str:
    """The irreducible component owning the basis point N^k t^l."""
    if variant == "sh":
        if k >= 0:
            return "Sh+"
        if k <= -(twol + 4):
            return "Sh-"
        if -(twol + 1) <= k <= -3:
            return "J"
        if k in (-1, -2) and k >= -(twol + 1):
            return "I+/(Sh+ (+) J)"
        if k in (-(twol + 2), -(twol + 3)) and k <= -3:
            return "I-/(Sh- (+) J)"
        return "Sh/(I+ + I-)"
    if variant == "sh_prime":
        if (k, twol) == (0, 0):
            return "I'0"
        if 0 <= k <= 1:
            return "BH+/I'0"
        if -1 <= twol + k <= 0:
            return "BH-/I'0"
        if k >= 2:
            return "Sh+/BH+"
        if twol + k <= -2:
            return "Sh'-/BH-"
        return "J'/(BH+ + BH-)"
    raise ValueError(variant)


def zh_component(k: int, twol: int) -> str:
    """Component of N^k t^l in the middle-twist scalar space:
    '+' for k >= 0, '-' for k <= -(2l+2), '0' for -(2l+1) <= k <= -1."""
    if k >= 0:
        return "+"
    if k <= -(twol + 2):
        return "-"
    return "0"


def h_kernel_component(name: str, k: int, twol: int) -> str:
    """Component of a kernel-basis element of the matrix space W.

    bF/bG at k in {-1, -(2l+2)} and NNZp generate the non-semisimple
    pieces; everything else falls into Q+/Q0/Q-.
    """
    if name == "NNZp":
        return "trivial-quot"
    if name in ("bF", "bG"):
        if k >= 0:
            return "Q+"
        if k <= -(twol + 3):
            return "Q-"
        if -(twol + 1) <= k <= -2:
            return "Q0"
        return "tau-quot"
    if name == "bH":
        if k >= 0:
            return "Q+"
        if k <= -(twol + 3):
            return "Q-"
        return "Q0"
    raise ValueError(name)


def wprime_component(name: str, k: int, twol: int) -> str:
    """Component of a K-type basis element of the matrix space W'."""
    if name == "Ik":
        return "kerMx"
    if name == "Jt":
        return "trivial" if twol == 1 else "Q'0"
    if name in ("Ft", "Gt"):
        if k >= 1:
            return "Q'+"
        if k <= -(twol + 2):
            return "Q'-"
        if -twol <= k <= -1:
            return "Q'0"
        return "kerMx"
    if name == "Ht":
        if k >= 1:
            return "Q'+"
        if k <= -(twol + 2):
            return "Q'-"
        if -(twol + 1) <= k <= -1:
            return "Q'0"
        return "kerMx"
    raise ValueError(name)


# -- exact expansions in the named bases ----------------------------------------


def _block_degrees(F: FieldMatrix):
    degs = set()
    for row in F.entries:
        for e in row:
            for k, p in e.blocks.items():
                for key in p:
                    from quatlab.fields import _mono_degree

                    degs.add((k, _mono_degree(key)))
    return degs


def _range_pairs(twol):
    return [(m, n) for m in range(-twol - 2, twol + 1, 2) for n in range(-twol - 2, twol + 1, 2)]


def wprime_basis_candidates(F: FieldMatrix):
    """Candidate K-type basis elements covering the blocks of F."""
    cands = []
    seen = set()

    def add(tag, k, twol):
        if twol < 0 and tag != "Ik":
            return
        key = (tag, k, twol)
        if key in seen:
            return
        seen.add(key)
        if tag == "Ft":
            for m in range(-twol - 2, twol + 1, 2):
                for n in range(-twol, twol - 1, 2):
                    v = fam_Ft(twol, m, n)
                    if not v.is_zero():
                        cands.append((("Ft", k, twol, m, n), v.shift_n(k)))
        elif tag == "Gt":
            for m in range(-twol, twol - 1, 2):
                for n in range(-twol - 2, twol + 1, 2):
                    v = fam_Gt(twol, m, n)
                    if not v.is_zero():
                        cands.append((("Gt", k, twol, m, n), v.shift_n(k)))
        elif tag == "Ht":
            for m in range(-twol - 2, twol + 1, 2):
                for n in range(-twol - 2, twol + 1, 2):
                    v = fam_Ht(twol, m, n)
                    if not v.is_zero():
                        cands.append((("Ht", k, twol, m, n), v.shift_n(k)))
        elif tag == "Ik" and k != 0 and twol >= -1:
            for m in range(-twol - 2, twol + 1, 2):
                for n in range(-twol - 2, twol + 1, 2):
                    v = fam_Ik(k, twol, m, n)
                    if not v.is_zero():
                        cands.append((("Ik", k, twol, m, n), v))
        elif tag == "Jt":
            for m in range(-twol, twol - 1, 2):
                for n in range(-twol, twol - 1, 2):
                    v = fam_Jt(twol, m, n)
                    if not v.is_zero():
                        cands.append((("Jt", -1, twol, m, n), v))

    for (k, d) in sorted(_block_degrees(F)):
        for tag in ("Ft", "Gt", "Ht"):
            add(tag, k, d)
        add("Ik", k, d)  # first block of Ik
        add("Ik", k + 1, d - 2)  # second block of Ik
        if k == -1:
            add("Jt", -1, d)
    return cands


def expand_wprime(F: FieldMatrix):
    """Exact coordinates of F in the K-type basis of the matrix space W'.

    Returns a list of (key, coeff) with key = (family, k, 2l, 2m, 2n).
    """
    if F.is_zero():
        return []
    cands = wprime_basis_candidates(F)
    sol = expand_matrix_in_basis(F, [v for (_, v) in cands])
    if sol is None:
        raise ValueError("element is outside the K-type basis span")
    from fractions import Fraction

    zero = (Fraction(0), Fraction(0))
    return [(cands[i][0], sol[i]) for i in range(len(sol)) if sol[i] != zero]


def w_kernel_basis_candidates(F: FieldMatrix):
    cands = []
    seen = set()

    def add(tag, k, twol):
        key = (tag, k, twol)
        if key in seen or twol < 0:
            return
        seen.add(key)
        if tag == "bF":
            for m in range(-twol - 2, twol + 1, 2):
                for n in range(-twol, twol - 1, 2):
                    v = fam_bF(twol, m, n)
                    if not v.is_zero():
                        cands.append((("bF", k, twol, m, n), v.shift_n(k)))
        elif tag == "bG":
            for m in range(-twol, twol - 1, 2):
                for n in range(-twol - 2, twol + 1, 2):
                    v = fam_bG(twol, m, n)
                    if not v.is_zero():
                        cands.append((("bG", k, twol, m, n), v.shift_n(k)))
        elif tag == "bH":
            for m in range(-twol - 2, twol + 1, 2):
                for n in range(-twol - 2, twol + 1, 2):
                    v = fam_bH(k, twol, m, n)
                    if not v.is_zero():
                        cands.append((("bH", k, twol, m, n), v))

    for (k, d) in sorted(_block_degrees(F)):
        for tag in ("bF", "bG", "bH"):
            add(tag, k, d)
        add("bH", k + 1, d - 2)
        if (k, d) == (-2, 1):
            cands.append((("NNZp", -2, 1, 0, 0), fam_NNZp()))
    return cands


def expand_w_kernel(F: FieldMatrix):
    """Coordinates in the kernel basis of Tr o partial_plus on W."""
    if F.is_zero():
        return []
    cands = w_kernel_basis_candidates(F)
    sol = expand_matrix_in_basis(F, [v for (_, v) in cands])
    if sol is None:
        raise ValueError("element is outside the kernel-basis span")
    from fractions import Fraction

    zero = (Fraction(0), Fraction(0))
    return [(cands[i][0], sol[i]) for i in range(len(sol)) if sol[i] != zero]


def varpi_H(F: FieldMatrix) -> FieldMatrix:
    """Projection keeping the bH terms of a kernel-basis element."""
    out = FieldMatrix.zero(2, 2)
    for (name, k, twol, m, n), c in expand_w_kernel(F):
        if name == "bH":
            out = out + fam_bH(k, twol, m, n).scale(c)
    return out


# -- harmonic K-type split and the p / tau maps ---------------------------------

_HARM_FAMS_PLUS = (("Ft", fam_Ft), ("Gt", fam_Gt), ("Ht", fam_Ht), ("Ith", fam_It_harm))
_HARM_FAMS_MINUS = (("Ftp", fam_Ftp), ("Gtp", fam_Gtp), ("Htp", fam_Htp), ("Itph", fam_Itp_harm))


def harmonic_matrix_split(H: FieldMatrix, degree: int):
    """Expand a harmonic matrix of the given homogeneity in family types.

    Returns {family tag: list of (2l, 2m, 2n, coeff)}.
    """
    if degree >= 0:
        twol = degree
        fams = _HARM_FAMS_PLUS
    else:
        twol = -degree - 2
        if twol < 0:
            raise ValueError("no harmonic matrices of degree -1")
        fams = _HARM_FAMS_MINUS
    cands = []
    for tag, fn in fams:
        for m in range(-twol - 2, twol + 3, 2):
            for n in range(-twol - 2, twol + 3, 2):
                try:
                    v = fn(twol, m, n)
                except ValueError:
                    continue
                if not v.is_zero():
                    cands.append(((tag, twol, m, n), v))
    sol = expand_matrix_in_basis(H, [v for (_, v) in cands])
    if sol is None:
        raise ValueError("matrix is not in the harmonic family span")
    from fractions import Fraction

    zero = (Fraction(0), Fraction(0))
    out = {}
    for i, c in enumerate(sol):
        if c != zero:
            tag, tl, m, n = cands[i][0]
            out.setdefault(tag, []).append((tl, m, n, c))
    return out


def _matrix_harmonic_parts(F: FieldMatrix):
    """Regroup F as sum_j N^j H_j with H_j harmonic matrices; {j: matrix}."""
    parts = {}
    for i in range(F.rows):
        for j_col in range(F.cols):
            for m, h in F.entries[i][j_col].harmonic_parts().items():
                mat = parts.setdefault(m, FieldMatrix.zero(F.rows, F.cols))
                mat.entries[i][j_col] = mat.entries[i][j_col] + ScalarField({0: h})
    return parts


_P_KEEP = {
    "a+": ("Ft", "Ht"),
    "s+": ("Gt", "Ht"),
    "a-": ("Htp", "Ftp"),
    "s-": ("Htp", "Gtp"),
}

_FAM_BY_TAG = {
    "Ft": fam_Ft,
    "Gt": fam_Gt,
    "Ht": fam_Ht,
    "Ftp": fam_Ftp,
    "Gtp": fam_Gtp,
    "Htp": fam_Htp,
}


def p_projection(variant: str, F: FieldMatrix) -> FieldMatrix:
    """The K-type projections behind the tau maps.

    In the graded basis N^k t^l, only the two genuinely harmonic towers
    survive: k = 0 (polynomial harmonics, kept by the + variants) and
    k = -(2l+1) (inverted harmonics, kept by the - variants).  Within the
    surviving tower the two family types listed for the variant are kept.
    """
    keep = _P_KEEP[variant]
    out = FieldMatrix.zero(2, 2)
    sign_plus = variant.endswith("+")
    for m_pow, hmat in _matrix_harmonic_parts(F).items():
        for d, comp in hmat.homogeneous_components().items():
            # comp is a polynomial harmonic matrix of degree d at N^m_pow
            if comp.is_zero():
                continue
            if sign_plus:
                if m_pow != 0:
                    continue
                homogeneity = d
            else:
                if m_pow != -(d + 1):
                    continue
                homogeneity = -d - 2
                comp = comp.shift_n(m_pow)
            for tag, coords in harmonic_matrix_split(comp, homogeneity).items():
                if tag in keep:
                    for (tl, mm, nn, c) in coords:
                        out = out + _FAM_BY_TAG[tag](tl, mm, nn).scale(c)
    return out


def tau(variant: str, F: FieldMatrix) -> FieldMatrix:
    """Equivariant maps onto the doubly regular spaces.

    tau_a+/- produce symmetric-pair 4-columns, tau_s+/- produce 4-rows.
    """
    p = p_projection(variant, F)
    if variant in ("a+", "a-"):
        return sigma(apply_partial_left(p)).scale(qi(-1))
    return sigma_prime(apply_partial_right(p))
