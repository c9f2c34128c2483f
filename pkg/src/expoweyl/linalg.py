"""Sparse exact linear algebra over a ScalarField.

Vectors are dicts ``key -> Scalar``; keys are ordered by a caller-supplied
sort key and the pivot of a row is its largest key.
"""

from __future__ import annotations


class Echelon:
    """Incrementally maintained row-echelon basis of a subspace."""

    def __init__(self, order=None):
        self.order = order or (lambda k: k)
        self.rows = {}  # pivot key -> row with row[pivot] == 1

    def __len__(self):
        return len(self.rows)

    def _lead(self, vec):
        return max(vec, key=self.order)

    def reduce(self, vec):
        vec = dict(vec)
        done = {}
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                done[lead] = vec.pop(lead)
                continue
            c = vec[lead]
            for k, a in row.items():
                v = vec.get(k)
                if v is None:
                    if k not in done:
                        vec[k] = -c * a
                    else:
                        # cannot happen: row entries are smaller than its pivot
                        raise AssertionError("echelon order violated")
                else:
                    v = v - c * a
                    if v:
                        vec[k] = v
                    else:
                        del vec[k]
        return done

    def add(self, vec):
        """Insert ``vec``; return the normalised new row, or None if already in the span."""
        red = self.reduce(vec)
        if not red:
            return None
        lead = self._lead(red)
        inv = red[lead].inverse()
        row = {k: v * inv for k, v in red.items()}
        self.rows[lead] = row
        return row

    def contains(self, vec) -> bool:
        return not self.reduce(vec)


def nullspace(rows, columns, order=None):
    """Basis of ``{c : sum_col row[col] * c[col] == 0 for every row}``.

    Each basis vector has a 1 at one non-pivot column and zeros at the other
    non-pivot columns; vectors are returned in increasing order of that column.
    """
    order = order or (lambda k: k)
    ech = Echelon(order)
    for r in rows:
        if r:
            ech.add(r)
    # full back-substitution so that pivot rows only touch free columns
    pivots = sorted(ech.rows, key=order)
    reduced = {}
    for p in pivots:
        row = dict(ech.rows[p])
        for k in sorted([k for k in row if k != p and k in reduced], key=order, reverse=True):
            c = row.pop(k)
            for kk, a in reduced[k].items():
                if kk == k:
                    continue
                v = row.get(kk)
                v = -c * a if v is None else v - c * a
                if v:
                    row[kk] = v
                else:
                    row.pop(kk, None)
        reduced[p] = row
    free = [c for c in sorted(columns, key=order) if c not in reduced]
    basis = []
    for f in free:
        vec = {}
        for p, row in reduced.items():
            a = row.get(f)
            if a:
                vec[p] = -a
        vec[f] = 1
        basis.append(vec)
    return basis
