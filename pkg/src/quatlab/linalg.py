"""Exact linear algebra over Q(i), used for basis expansions and Mx^-1.

Fields are vectorized on their monomial support; small dense Gaussian
elimination with exact rational pivoting does the rest.
"""

from __future__ import annotations

from quatlab._poly import QI_ZERO, qi_add, qi_inv, qi_is_zero, qi_mul, qi_neg, qi_sub
from quatlab.fields import FieldMatrix, ScalarField


def field_support(fields):
    """Union of (N power, monomial) coordinates over the given scalar fields."""
    support = set()
    for f in fields:
        for k, p in f.blocks.items():
            for key in p:
                support.add((k, key))
    return sorted(support)


def field_to_vector(f: ScalarField, support):
    return [f.blocks.get(k, {}).get(key, QI_ZERO) for (k, key) in support]


def matrix_to_vector(m: FieldMatrix, support_by_entry):
    vec = []
    for i in range(m.rows):
        for j in range(m.cols):
            vec.extend(field_to_vector(m.entries[i][j], support_by_entry[(i, j)]))
    return vec


def matrix_support(mats):
    rows, cols = mats[0].rows, mats[0].cols
    support = {}
    for i in range(rows):
        for j in range(cols):
            support[(i, j)] = field_support([m.entries[i][j] for m in mats])
    return support


def solve_exact(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly over Q(i).

    columns: list of coefficient vectors (same length as target).
    Returns the list of x_j, or None when the system is inconsistent.
    Free variables are set to zero; raises on redundant (dependent) columns
    only if the system is still consistent that way.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for rr in range(r, nrows):
            if not qi_is_zero(aug[rr][c]):
                pivot = rr
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = qi_inv(aug[r][c])
        aug[r] = [qi_mul(v, inv) for v in aug[r]]
        for rr in range(nrows):
            if rr != r and not qi_is_zero(aug[rr][c]):
                factor = aug[rr][c]
                aug[rr] = [qi_sub(v, qi_mul(factor, w)) for v, w in zip(aug[rr], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    # consistency: rows with all-zero coefficients must have zero rhs
    for rr in range(r, nrows):
        if not qi_is_zero(aug[rr][ncols]):
            return None
    x = [QI_ZERO] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][ncols]
    return x


def expand_in_basis(target_fields, basis_fields):
    """Coordinates of target in the span of basis (lists of ScalarField).

    Returns coefficient list or None if the target is outside the span.
    """
    support = field_support(list(basis_fields) + list(target_fields))
    cols = [field_to_vector(b, support) for b in basis_fields]
    tgt = field_to_vector(target_fields[0], support) if len(target_fields) == 1 else None
    assert tgt is not None
    return solve_exact(cols, tgt)


def expand_matrix_in_basis(target: FieldMatrix, basis):
    """Coordinates of a matrix field in the span of matrix fields."""
    if not basis:
        return None if not target.is_zero() else []
    support = matrix_support(list(basis) + [target])
    cols = [matrix_to_vector(b, support) for b in basis]
    tgt = matrix_to_vector(target, support)
    return solve_exact(cols, tgt)


def lincomb(coeffs, mats):
    out = None
    for c, m in zip(coeffs, mats):
        term = m.scale(c)
        out = term if out is None else out + term
    return out
