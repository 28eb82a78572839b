"""Exact integer matrices and finitely generated abelian groups.

Everything here works over Python ints, so no entry can overflow. The
central routine is :func:`smith_normal_form`; cokernels, kernels of induced
homomorphisms and ``A (x) Z/l`` dimensions are all read off Smith forms.

>>> cokernel(IntMatrix.from_rows([[2, 4], [0, 6]]))
FgAbGroup(rank=0, torsion=(2, 6))
>>> str(FgAbGroup.from_orders(7, 91))
'Z/7 + Z/91'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .errors import OrbitkitError
from .numtheory import is_prime


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix; zero rows or zero columns are allowed."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise OrbitkitError(f"negative shape {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise OrbitkitError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise OrbitkitError("column count is ambiguous for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise OrbitkitError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise OrbitkitError(
                f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise OrbitkitError("hstack needs equal row counts")
        a, b = self.to_rows(), other.to_rows()
        return IntMatrix.from_rows([a[i] + b[i] for i in range(self.rows)],
                                   self.cols + other.cols)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise OrbitkitError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


class SmithForm(NamedTuple):
    """``left @ M @ right`` is diagonal with entries ``diagonal``."""

    diagonal: list[int]
    left: IntMatrix
    right: IntMatrix

    def matrix(self, rows: int, cols: int) -> IntMatrix:
        return IntMatrix.diagonal(self.diagonal, rows, cols)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular witnesses.

    Returns ``(D, U, V)`` where ``D`` lists the ``min(rows, cols)`` diagonal
    entries (nonnegative, ``d1 | d2 | ...``, zeros last) and ``U @ m @ V``
    equals the rows x cols diagonal matrix built from ``D``. Pivots are chosen
    by smallest absolute value, which keeps intermediate entries small.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    diag = []
    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if a[i][j]]
        if not nonzero:
            diag.extend([0] * (min(rows, cols) - t))
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            # clear column t below the pivot
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            rest = [(abs(a[i][t]), i) for i in range(t + 1, rows) if a[i][t]]
            if rest:
                swap_rows(t, min(rest)[1])
                continue
            # clear row t right of the pivot
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[t][j]), j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                swap_cols(t, min(rest)[1])
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            # pivot fails to divide the rest: fold that row in and go again
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        diag.append(a[t][t])

    return SmithForm(diag, IntMatrix.from_rows(u, rows), IntMatrix.from_rows(v, cols))


@dataclass(frozen=True, order=True)
class FgAbGroup:
    """``Z^rank + Z/d1 + ... + Z/dk`` with ``2 <= d1 | d2 | ... | dk``.

    The canonical form makes ``==`` an isomorphism test. Use
    :meth:`from_orders` to build a group from arbitrary cyclic orders.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise OrbitkitError("negative rank")
        if any(d < 2 for d in self.torsion):
            raise OrbitkitError(f"invariant factors must be >= 2: {self.torsion}")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise OrbitkitError(f"{d} does not divide {e}; not a divisor chain")

    @classmethod
    def from_orders(cls, *orders: int) -> FgAbGroup:
        """Direct sum of cyclic groups ``Z/n``; ``0`` stands for ``Z``."""
        if any(n < 0 for n in orders):
            raise OrbitkitError("cyclic orders must be nonnegative")
        return cokernel(IntMatrix.diagonal(list(orders)))

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        return cls.from_orders(n)

    @property
    def order(self) -> int | None:
        """Group order, or None if the group is infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.rank + len(self.torsion) <= 1

    def direct_sum(self, other: FgAbGroup) -> FgAbGroup:
        return FgAbGroup.from_orders(*([0] * (self.rank + other.rank)),
                                     *self.torsion, *other.torsion)

    def presentation(self) -> Presentation:
        gens = self.rank + len(self.torsion)
        return Presentation(gens, IntMatrix.diagonal(
            [0] * self.rank + list(self.torsion), gens, gens))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class Presentation:
    """``Z^generators / image(relations)``; relations is generators x k."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.generators:
            raise OrbitkitError(
                f"relation matrix has {self.relations.rows} rows for "
                f"{self.generators} generators")

    def group(self) -> FgAbGroup:
        return cokernel(self.relations)


GroupLike = Union[FgAbGroup, Presentation]


def cokernel(m: IntMatrix) -> FgAbGroup:
    """``Z^rows / image(m)`` for ``m`` viewed as a map ``Z^cols -> Z^rows``."""
    diag = smith_normal_form(m).diagonal
    nonzero = [d for d in diag if d]
    return FgAbGroup(m.rows - len(nonzero), tuple(d for d in nonzero if d > 1))


def _as_presentation(g: GroupLike) -> Presentation:
    return g.presentation() if isinstance(g, FgAbGroup) else g


def _solve_in_image(snf: SmithForm, rank: int, vec: list[int]) -> list[int] | None:
    """Coordinates ``c`` (length ``rank``) with ``vec = U^-1 diag(d) c``, or None."""
    u = snf.left
    w = [sum(u[i, k] * vec[k] for k in range(len(vec))) for i in range(u.rows)]
    if any(w[i] for i in range(rank, len(w))):
        return None
    out = []
    for i in range(rank):
        q, r = divmod(w[i], snf.diagonal[i])
        if r:
            return None
        out.append(q)
    return out


def in_image(m: IntMatrix, vec: Sequence[int]) -> bool:
    """Whether ``vec`` lies in the integer column span of ``m``."""
    snf = smith_normal_form(m)
    rank = sum(1 for d in snf.diagonal if d)
    return _solve_in_image(snf, rank, list(vec)) is not None


def hom_kernel(source: GroupLike, target: GroupLike, m: IntMatrix) -> FgAbGroup:
    """Kernel of the homomorphism ``source -> target`` induced by ``m``.

    ``m`` is a ``target.generators x source.generators`` matrix acting on
    generators. It must send every relation of ``source`` into the relation
    lattice of ``target``; otherwise it does not define a homomorphism and an
    :class:`OrbitkitError` is raised.

    >>> z7 = FgAbGroup.cyclic(7)
    >>> hom_kernel(z7.direct_sum(z7), z7, IntMatrix.from_rows([[1, 1]]))
    FgAbGroup(rank=0, torsion=(7,))
    """
    a, b = _as_presentation(source), _as_presentation(target)
    if (m.rows, m.cols) != (b.generators, a.generators):
        raise OrbitkitError(
            f"map matrix must be {b.generators}x{a.generators}, got {m.rows}x{m.cols}")
    rel_a, rel_b = a.relations, b.relations

    snf_b = smith_normal_form(rel_b)
    rank_b = sum(1 for d in snf_b.diagonal if d)
    image_of_rel = m @ rel_a
    for j in range(image_of_rel.cols):
        if _solve_in_image(snf_b, rank_b, image_of_rel.column(j)) is None:
            raise OrbitkitError(
                f"map does not respect relation {j} of the source: "
                f"its image {image_of_rel.column(j)} is not a relation of the target")

    # L = {x : m x in image(rel_b)}, the x-part of ker [m | -rel_b]
    neg_b = IntMatrix(rel_b.rows, rel_b.cols, tuple(-e for e in rel_b.entries))
    joint = m.hstack(neg_b)
    snf_j = smith_normal_form(joint)
    rank_j = sum(1 for d in snf_j.diagonal if d)
    v = snf_j.right
    kernel_cols = [[v[i, j] for i in range(a.generators)] for j in range(rank_j, v.cols)]
    gens = IntMatrix.from_rows(
        [[col[i] for col in kernel_cols] for i in range(a.generators)], len(kernel_cols))

    # L has basis U^-1 diag(d) from the Smith form of gens; express the
    # source relations in that basis and take the cokernel
    snf_l = smith_normal_form(gens)
    rank_l = sum(1 for d in snf_l.diagonal if d)

    coords = []
    for j in range(rel_a.cols):
        c = _solve_in_image(snf_l, rank_l, rel_a.column(j))
        if c is None:  # pragma: no cover - guaranteed by the compatibility check
            raise OrbitkitError("source relation outside the kernel lattice")
        coords.append(c)
    rel_in_l = IntMatrix.from_rows(
        [[c[i] for c in coords] for i in range(rank_l)], len(coords))
    return cokernel(rel_in_l)


def tensor_dim(group: FgAbGroup, l: int) -> int:
    """Dimension of ``group (x) Z/l`` over the field with ``l`` elements."""
    if not is_prime(l):
        raise OrbitkitError(f"{l} is not prime")
    return group.rank + sum(1 for d in group.torsion if d % l == 0)
