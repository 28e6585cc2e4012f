"""Alexander polynomials via the Wirtinger presentation and Fox calculus.

One generator per arc, one relation per crossing.  Abelianizing the Fox
derivatives of the relation at a crossing with over arc o, incoming under
arc a and outgoing under arc b gives the row

    positive:  o: 1 - t      a: t        b: -1
    negative:  o: 1 - 1/t    a: 1/t      b: -1

The Alexander polynomial is any (n-1)-minor of this matrix, computed by
fraction-free elimination over exact Laurent arithmetic and normalized so
that D(t) = D(1/t) and D(1) = 1.  Two pivoting strategies share the work:
classical Bareiss two-term elimination on dense matrices, and, for the
large diagrams satellite splicing produces, sparse elimination restricted
to unit-monomial pivots (dividing by a previous pivot that is a unit is
trivially exact, so this stays fraction free).  Both only determine the
minor up to a unit, which the normalization removes.
"""

from __future__ import annotations

from .errors import BadWinding
from .laurent import LaurentPoly
from .pd import PDCode

_DENSE_LIMIT = 80

_ONE = LaurentPoly.one()
_MINUS_ONE = LaurentPoly.term(-1)
_T = LaurentPoly.term(1, 1)
_TINV = LaurentPoly.term(1, -1)


def _det_bareiss(m):
    """Determinant of a square matrix of LaurentPoly, fraction free."""
    n = len(m)
    if n == 0:
        return LaurentPoly.one()
    m = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]).exact_div(prev)
            row_i[k] = LaurentPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_unit(p):
    return len(p.coeffs) == 1 and p.coeffs[0] in (1, -1)


def _sparse_unit_det(rows):
    """Eliminate with unit-monomial pivots; result is the det up to a unit.

    ``rows``: list of dicts {col: LaurentPoly}.  Requires a unit pivot to be
    available at every step, which Wirtinger minors provide in practice
    (every relation contributes a -1 at its outgoing arc); falls back to
    dense Bareiss on the remainder otherwise.
    """
    rows = {i: dict(r) for i, r in enumerate(rows)}
    col_rows = {}
    for ri, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(ri)

    while len(rows) > 1:
        # cheapest unit pivot by Markowitz cost
        best = None
        for ri, row in rows.items():
            rlen = len(row) - 1
            for c, v in row.items():
                if _is_unit(v):
                    cost = rlen * (len(col_rows[c]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, ri, c)
            if best is not None and best[0] == 0:
                break
        if best is None:
            order = sorted(rows)
            cols = sorted({c for r in rows.values() for c in r})
            dense = [[rows[ri].get(c, LaurentPoly.zero()) for c in cols]
                     for ri in order]
            return _det_bareiss(dense)
        _, pr, c = best
        prow = rows.pop(pr)
        pivot = prow.pop(c)
        inv_shift = -pivot.offset
        inv_neg = pivot.coeffs[0] < 0
        col_rows[c].discard(pr)
        for cc in prow:
            col_rows[cc].discard(pr)
        for r in list(col_rows.get(c, ())):
            row = rows[r]
            lam = row.pop(c)
            col_rows[c].discard(r)
            lam = lam.shift(inv_shift)
            if inv_neg:
                lam = -lam
            for cc, v in prow.items():
                cur = row.get(cc)
                nv = lam * v if cur is None else cur - lam * v
                if cur is None:
                    nv = -nv
                if nv.is_zero():
                    if cur is not None:
                        del row[cc]
                        col_rows[cc].discard(r)
                else:
                    row[cc] = nv
                    if cur is None:
                        col_rows[cc].add(r)
    (row,) = rows.values()
    (val,) = row.values()
    return val


def normalize_alexander(raw: LaurentPoly) -> LaurentPoly:
    """Center exponents and fix the sign so D(t) = D(1/t), D(1) = 1."""
    if raw.is_zero():
        raise ValueError("zero determinant: not a knot presentation")
    span = raw.max_exp - raw.min_exp
    if span % 2:
        raise ValueError("odd exponent span: cannot symmetrize")
    centered = raw.shift(-(raw.min_exp + raw.max_exp) // 2)
    if centered(1) < 0:
        centered = -centered
    if not centered.is_palindromic():
        raise ValueError(f"non-palindromic Alexander candidate: {centered}")
    if centered(1) != 1:
        raise ValueError(f"normalization failed: D(1) = {centered(1)}")
    return centered


def alexander_matrix(d: PDCode):
    """Full Fox-derivative presentation matrix as sparse rows."""
    rows = []
    for rec in d.crossings:
        row = {}

        def add(col, val, row=row):
            cur = row.get(col)
            nv = val if cur is None else cur + val
            if nv.is_zero():
                row.pop(col, None)
            else:
                row[col] = nv

        if rec.sign > 0:
            add(rec.over, _ONE - _T)
            add(rec.under_in, _T)
        else:
            add(rec.over, _ONE - _TINV)
            add(rec.under_in, _TINV)
        add(rec.under_out, _MINUS_ONE)
        rows.append(row)
    return rows


def alexander_raw(d: PDCode, drop_arc: int | None = None) -> LaurentPoly:
    """Minor determinant up to a unit, deleting ``drop_arc``'s generator and
    its defining relation (default: the highest-labeled arc)."""
    n = d.n_crossings
    if n == 0:
        return LaurentPoly.one()
    if drop_arc is None:
        drop_arc = n - 1
    recs = d.crossings
    rows = alexander_matrix(d)
    minor_rows = []
    for i, rec in enumerate(recs):
        if rec.under_out == drop_arc:
            continue
        row = {c: v for c, v in rows[i].items() if c != drop_arc}
        minor_rows.append(row)
    assert len(minor_rows) == n - 1
    if n - 1 <= _DENSE_LIMIT:
        cols = [c for c in range(n) if c != drop_arc]
        dense = [[row.get(c, LaurentPoly.zero()) for c in cols]
                 for row in minor_rows]
        return _det_bareiss(dense)
    return _sparse_unit_det(minor_rows)


def alexander(d: PDCode) -> LaurentPoly:
    """Symmetrized, normalized Alexander polynomial of a knot diagram."""
    return normalize_alexander(alexander_raw(d))


def satellite_alexander(dp: LaurentPoly, dk: LaurentPoly, w: int) -> LaurentPoly:
    """Alexander polynomial of a satellite from its factors:
    pattern closure polynomial times companion polynomial at t^w."""
    if w == 0:
        raise BadWinding("winding number 0 is outside the satellite formula")
    return normalize_alexander(dp * dk.substitute_power(w))
