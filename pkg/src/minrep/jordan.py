"""Complex Jordan algebras: the rank-one algebra C and Sym(r, C).

Elements are stored as symmetric r x r matrices.  The coordinate vector of an
element uses the basis ``B_ii = E_ii`` and ``B_ij = E_ij + E_ji`` (i < j), in
row-major order over the upper triangle, so the coordinate ``z_ij`` is simply
the (i, j) matrix entry.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .scalar import Scalar, as_scalar

RANK1 = "Rank1"
SYM = "SymMatrices"


def _sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(mat):
    """Leibniz expansion; works for entries from any commutative ring."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = None
    for perm in permutations(range(n)):
        term = mat[0][perm[0]]
        for i in range(1, n):
            term = term * mat[i][perm[i]]
        term = term if _sign(perm) > 0 else -term
        total = term if total is None else total + term
    return total


def minor(mat, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(mat) if k != i]


def adjugate(mat):
    n = len(mat)
    if n == 1:
        one = mat[0][0] * 0 + 1
        return [[one]]
    return [[det(minor(mat, j, i)) if (i + j) % 2 == 0 else -det(minor(mat, j, i)) for j in range(n)]
            for i in range(n)]


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def coord_pairs(r: int):
    return [(i, j) for i in range(r) for j in range(i, r)]


class AlgebraDescriptor:
    """Rank, dimension, unit and Jordan frame of a concrete algebra."""

    def __init__(self, family: str, r: int):
        if family == RANK1:
            if r != 1:
                raise ValueError("the rank-one algebra has r = 1")
        elif family != SYM:
            raise ValueError(f"no arithmetic for family {family!r}; use classify() for table lookup")
        if r < 1:
            raise ValueError("rank must be positive")
        self.family = family
        self.r = r
        self.n = r * (r + 1) // 2
        self.pairs = coord_pairs(r)

    def __eq__(self, other):
        return isinstance(other, AlgebraDescriptor) and (self.family, self.r) == (other.family, other.r)

    def __hash__(self):
        return hash((self.family, self.r))

    def __repr__(self):
        return f"AlgebraDescriptor({self.family!r}, {self.r})"

    @property
    def unit(self) -> "JordanElement":
        return self.diagonal([1] * self.r)

    @property
    def frame(self) -> list["JordanElement"]:
        out = []
        for i in range(self.r):
            w = [0] * self.r
            w[i] = 1
            out.append(self.diagonal(w))
        return out

    def diagonal(self, values) -> "JordanElement":
        values = [as_scalar(v) for v in values]
        zero = Scalar(0)
        mat = [[values[i] if i == j else zero for j in range(self.r)] for i in range(self.r)]
        return JordanElement(self, mat)

    def from_coords(self, coords) -> "JordanElement":
        coords = [as_scalar(c) for c in coords]
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        mat = [[Scalar(0)] * self.r for _ in range(self.r)]
        for (i, j), c in zip(self.pairs, coords):
            mat[i][j] = c
            mat[j][i] = c
        return JordanElement(self, mat)

    def basis(self) -> list["JordanElement"]:
        out = []
        for k in range(self.n):
            v = [0] * self.n
            v[k] = 1
            out.append(self.from_coords(v))
        return out

    def symbolic(self, d=None):
        """Symmetric matrix of coordinate polynomials z_ij."""
        from .poly import MultiPoly

        idx = {p: k for k, p in enumerate(self.pairs)}
        return [[MultiPoly.var(idx[(min(i, j), max(i, j))], self.n, d) for j in range(self.r)]
                for i in range(self.r)]

    def delta_poly(self, d=None):
        return det(self.symbolic(d))

    def trace_poly(self, d=None):
        z = self.symbolic(d)
        total = z[0][0]
        for i in range(1, self.r):
            total = total + z[i][i]
        return total

    def adjugate_poly(self, d=None):
        return adjugate(self.symbolic(d))

    def diagonal_indices(self) -> list[int]:
        """Coordinate positions of z_11, ..., z_rr."""
        return [self.pairs.index((i, i)) for i in range(self.r)]


def rank_one() -> AlgebraDescriptor:
    return AlgebraDescriptor(RANK1, 1)


def sym(r: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(SYM, r)


class JordanElement:
    __slots__ = ("algebra", "mat")

    def __init__(self, algebra: AlgebraDescriptor, mat):
        r = algebra.r
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("matrix shape does not match the algebra")
        mat = [[as_scalar(x) for x in row] for row in mat]
        for i in range(r):
            for j in range(i + 1, r):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("entries must form a symmetric matrix")
        self.algebra = algebra
        self.mat = mat

    def coords(self) -> list[Scalar]:
        return [self.mat[i][j] for (i, j) in self.algebra.pairs]

    def _check(self, other):
        if not isinstance(other, JordanElement) or other.algebra != self.algebra:
            raise ValueError("elements belong to different algebras")

    def __eq__(self, other):
        return isinstance(other, JordanElement) and other.algebra == self.algebra and other.mat == self.mat

    def __hash__(self):
        return hash((self.algebra, tuple(tuple(r) for r in self.mat)))

    def __add__(self, other):
        self._check(other)
        r = self.algebra.r
        return JordanElement(self.algebra, [[self.mat[i][j] + other.mat[i][j] for j in range(r)] for i in range(r)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "JordanElement":
        c = as_scalar(c)
        return JordanElement(self.algebra, [[x * c for x in row] for row in self.mat])

    def __repr__(self):
        return f"JordanElement({self.algebra.family}, {[[str(x) for x in row] for row in self.mat]})"


def jordan_mul(x: JordanElement, y: JordanElement) -> JordanElement:
    x._check(y)
    xy = matmul(x.mat, y.mat)
    yx = matmul(y.mat, x.mat)
    half = Scalar(Fraction(1, 2))
    r = x.algebra.r
    return JordanElement(x.algebra, [[(xy[i][j] + yx[i][j]) * half for j in range(r)] for i in range(r)])


def det_delta(x: JordanElement) -> Scalar:
    return det(x.mat)


def trace(x: JordanElement) -> Scalar:
    total = Scalar(0)
    for i in range(x.algebra.r):
        total = total + x.mat[i][i]
    return total


def inverse(x: JordanElement) -> JordanElement:
    dlt = det_delta(x)
    if dlt.is_zero():
        raise ZeroDivisionError("singular Jordan element")
    inv = dlt.inverse()
    adj = adjugate(x.mat)
    return JordanElement(x.algebra, [[a * inv for a in row] for row in adj])


def quad_apply(a: JordanElement, x: JordanElement) -> JordanElement:
    """P(a)x = 2 a o (a o x) - (a o a) o x."""
    t1 = jordan_mul(a, jordan_mul(a, x)).scale(2)
    t2 = jordan_mul(jordan_mul(a, a), x)
    return t1 - t2


def quad_rep(a: JordanElement) -> list[list[Scalar]]:
    """Matrix of P(a) on the coordinate basis (columns are images of basis vectors)."""
    cols = [quad_apply(a, b).coords() for b in a.algebra.basis()]
    n = a.algebra.n
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def apply_matrix(mat, x: JordanElement) -> JordanElement:
    v = x.coords()
    out = []
    for row in mat:
        acc = Scalar(0)
        for m, c in zip(row, v):
            acc = acc + m * c
        out.append(acc)
    return x.algebra.from_coords(out)


# Static copy of the classification of the simple real Lie algebras of
# Hermitian type arising from simple complex Jordan algebras.
_TABLE = [
    {"family": RANK1, "V": "C", "Q": "z^2", "l": "C", "g": "sl(2,C)",
     "g_tilde_R": "sl(2,R)", "l_R": "iR", "g_R": "su(1,1)"},
    {"family": "SpinFactor", "V": "C^n", "Q": "Delta(z)^2", "l": "so(n,C)+C", "g": "sl(n+2,C)",
     "g_tilde_R": "sl(n+2,R)", "l_R": "so(n)+iR", "g_R": "so(n,2)"},
    {"family": SYM, "V": "Sym(r,C)", "Q": "det(z)^2", "l": "sl(r,C)+C", "g": "sp(r,C)",
     "g_tilde_R": "sp(r,R)", "l_R": "su(r)+iR", "g_R": "sp(r,R)"},
    {"family": "FullMatrices", "V": "M(r,C)", "Q": "det(z)^2", "l": "sl(r,C)^2+C", "g": "sl(2r,C)",
     "g_tilde_R": "sl(2r,R)", "l_R": "su(r)^2+iR", "g_R": "su(r,r)"},
    {"family": "SkewMatrices", "V": "Skew(2r,C)", "Q": "det(z)", "l": "sl(2r,C)+C", "g": "so(4r,C)",
     "g_tilde_R": "so(4r)", "l_R": "so(2r)+iR", "g_R": "so*(4r)"},
    {"family": "Albert", "V": "Herm(3,O)", "Q": "det(z)^2", "l": "e6(C)+C", "g": "e7(C)",
     "g_tilde_R": "e7(R)", "l_R": "e6(R)+iR", "g_R": "e7(-25)"},
]

COLUMNS = ["V", "Q", "l", "g", "g_tilde_R", "l_R", "g_R"]


def classification_table() -> list[dict]:
    return [dict(row) for row in _TABLE]


def classify(family: str, r: int | None = None) -> dict:
    """Look a row up by family name or by its V column."""
    for row in _TABLE:
        if family in (row["family"], row["V"]):
            out = dict(row)
            if r is not None:
                out["r"] = r
            return out
    raise KeyError(f"unknown family {family!r}")
