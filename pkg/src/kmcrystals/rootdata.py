"""Symmetrizable Kac-Moody root data and exact Weyl group arithmetic.

A root datum packages a generalized Cartan matrix A together with a rational
coordinate realization of the weight lattice: column j of the matrix R holds
the coordinates of the simple root alpha_j, and row i of the matrix C reads
off the pairing with the simple coroot alpha_i^vee, so that C @ R == A.  All
arithmetic is exact: weights are tuples of fractions, Weyl group elements act
on the root lattice through integer matrices, and nothing is ever rounded.

>>> sl2 = preset("A1")
>>> sl2.pair(sl2.fundamental_weight(1), 1)
Fraction(1, 1)
>>> w = sl2.weyl((1,))
>>> w.act_weight(sl2.fundamental_weight(1))
(Fraction(-1, 1),)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Coords = tuple[Fraction, ...]
RootCoords = tuple[Fraction, ...]
Word = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]

# An element with more reduced-word letters than this in a descent strip is
# taken as evidence of a corrupted matrix rather than a long affine element.
_STRIP_CAP = 100_000


class NotGCM(ValueError):
    """The candidate matrix is not a generalized Cartan matrix."""


class NotSymmetrizable(ValueError):
    """No positive diagonal D with D @ A symmetric exists."""


class PairingInconsistent(ValueError):
    """The realization matrices R and C do not reproduce the Cartan matrix."""


class NotDominantIntegral(ValueError):
    """A weight required to be dominant integral is not."""


class WordNotReduced(ValueError):
    """A word handed to an operation that requires reducedness is not reduced."""


# ---------------------------------------------------------------------------
# exact vectors and small rational matrices


def vec(xs) -> Coords:
    return tuple(Fraction(x) for x in xs)


def vzero(m: int) -> Coords:
    return (Fraction(0),) * m


def vadd(a: Coords, b: Coords) -> Coords:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Coords, b: Coords) -> Coords:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Coords) -> Coords:
    return tuple(-x for x in a)


def vscale(c, a: Coords) -> Coords:
    c = Fraction(c)
    return tuple(c * x for x in a)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def _mat_vec(rows, v):
    return tuple(_dot(r, v) for r in rows)


def _mat_mul_int(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _identity_int(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def gauss_solve(matrix, rhs):
    """Solve matrix @ x = rhs over the rationals.

    `matrix` is a sequence of rows, `rhs` a vector of the same length.  Returns
    the unique solution as a tuple, or None when the system is singular or
    inconsistent.  Intended for the small dense systems this package meets.
    """
    m = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(matrix, rhs, strict=True)]
    nrows = len(m)
    ncols = len(m[0]) - 1
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None  # inconsistent
    if len(pivots) < ncols:
        return None  # underdetermined
    x = [Fraction(0)] * ncols
    for row, col in pivots:
        x[col] = m[row][ncols]
    return tuple(x)


def parse_rational(x) -> Fraction:
    """Accept ints, Fractions, and strings like '3' or '-5/2'."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise ValueError(f"cannot parse rational from {x!r}")


def rational_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# the datum


@dataclass(frozen=True)
class RootDatum:
    """A symmetrizable Kac-Moody root datum with a rational weight realization.

    Fields: `n` simple roots, weight coordinates of dimension `m`, the Cartan
    matrix `cartan` (n x n integers), `roots[j]` the coordinates of
    alpha_{j+1} (length m), `pairing[i]` the linear functional of
    alpha_{i+1}^vee (length m), and `sym` a positive symmetrizer.  Simple-root
    and Weyl-letter indices are 1-based throughout the public interface.
    """

    name: str
    n: int
    m: int
    cartan: IntMatrix
    roots: tuple[Coords, ...]
    pairing: tuple[Coords, ...]
    sym: tuple[Fraction, ...]
    fundamentals: tuple[Coords, ...] | None = field(default=None, compare=False)

    # -- basic linear data ---------------------------------------------------

    def simple_root(self, i: int) -> Coords:
        return self.roots[i - 1]

    def pair(self, mu: Coords, i: int) -> Fraction:
        """The evaluation <mu, alpha_i^vee>."""
        return _dot(self.pairing[i - 1], mu)

    def fundamental_weight(self, i: int) -> Coords:
        if self.fundamentals is None:
            raise ValueError(f"datum {self.name!r} carries no fundamental weights")
        return self.fundamentals[i - 1]

    def reflect_weight(self, i: int, mu: Coords) -> Coords:
        """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
        return vsub(mu, vscale(self.pair(mu, i), self.simple_root(i)))

    def is_integral(self, mu: Coords) -> bool:
        return all(self.pair(mu, i).denominator == 1 for i in range(1, self.n + 1))

    def is_dominant(self, mu: Coords) -> bool:
        return all(self.pair(mu, i) >= 0 for i in range(1, self.n + 1))

    def check_dominant_integral(self, mu: Coords) -> Coords:
        if not self.is_integral(mu):
            raise NotDominantIntegral(f"weight {mu} is not integral for {self.name!r}")
        if not self.is_dominant(mu):
            raise NotDominantIntegral(f"weight {mu} is not dominant for {self.name!r}")
        return mu

    @cached_property
    def _root_left_inverse(self):
        """Rows of L with L @ R == identity, via the exact normal equations."""
        n, m = self.n, self.m
        # gram = R^T R, invertible because the columns of R are independent
        gram = [[_dot(self.roots[a], self.roots[b]) for b in range(n)] for a in range(n)]
        cols = []
        for j in range(n):
            e = [Fraction(1) if k == j else Fraction(0) for k in range(n)]
            col = gauss_solve(gram, e)
            if col is None:
                raise PairingInconsistent("columns of the root matrix are dependent")
            cols.append(col)
        ginv = [[cols[j][i] for j in range(n)] for i in range(n)]  # symmetric anyway
        rt = [[self.roots[a][k] for k in range(m)] for a in range(n)]  # R^T rows
        return tuple(tuple(_dot(ginv[i], [rt[a][k] for a in range(n)]) for k in range(m))
                     for i in range(n))

    def root_coords(self, delta: Coords) -> RootCoords | None:
        """Write `delta` in the simple-root basis, or None if outside the span."""
        c = _mat_vec(self._root_left_inverse, delta)
        back = vzero(self.m)
        for j, cj in enumerate(c):
            back = vadd(back, vscale(cj, self.roots[j]))
        return c if back == delta else None

    def weight_drop(self, top: Coords, mu: Coords) -> int:
        """Height of top - mu, which must be a nonnegative integer root-lattice vector."""
        c = self.root_coords(vsub(top, mu))
        if c is None:
            raise ValueError("weight difference lies outside the root lattice span")
        total = sum(c, Fraction(0))
        if total.denominator != 1 or any(x.denominator != 1 for x in c):
            raise ValueError("weight difference is not an integral root combination")
        return int(total)

    # -- Weyl group ----------------------------------------------------------

    def _gen_matrix(self, i: int) -> IntMatrix:
        """Action of s_i on root-lattice coordinates: alpha_j -> alpha_j - a_ij alpha_i."""
        row = self.cartan[i - 1]
        return tuple(
            tuple((1 if k == j else 0) - (row[j] if k == i - 1 else 0) for j in range(self.n))
            for k in range(self.n)
        )

    def identity(self) -> "WeylElement":
        eye = _identity_int(self.n)
        return WeylElement(self, eye, eye, ())

    def simple(self, i: int) -> "WeylElement":
        if not 1 <= i <= self.n:
            raise ValueError(f"simple reflection index {i} out of range 1..{self.n}")
        g = self._gen_matrix(i)
        return WeylElement(self, g, g, (i,))

    def weyl(self, word) -> "WeylElement":
        """The element s_{i_1} ... s_{i_k} for word = (i_1, ..., i_k)."""
        w = self.identity()
        for i in word:
            w = w * self.simple(i)
        return w

    def act_root(self, w: "WeylElement", coeffs: RootCoords) -> RootCoords:
        return _mat_vec(w.mat, coeffs)

    @cached_property
    def positive_roots(self) -> tuple[RootCoords, ...]:
        """All positive roots, in root coordinates.  Finite type only."""
        simples = [tuple(Fraction(1) if k == j else Fraction(0) for k in range(self.n))
                   for j in range(self.n)]
        gens = [self._gen_matrix(i) for i in range(1, self.n + 1)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            if len(seen) > 4096:
                raise ValueError("positive root enumeration requires finite type")
            nxt = []
            for c in frontier:
                for g in gens:
                    img = _mat_vec(g, c)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        pos = sorted(c for c in seen if all(x >= 0 for x in c))
        return tuple(pos)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "cartan": [list(r) for r in self.cartan],
            "roots": [[rational_str(x) for x in col] for col in self.roots],
            "pairing": [[rational_str(x) for x in row] for row in self.pairing],
        }


def _symmetrizer(cartan: IntMatrix) -> tuple[Fraction, ...]:
    """A positive diagonal d with d_i a_ij == d_j a_ji, or NotSymmetrizable."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cartan[i][j] == 0 or i == j:
                    continue
                want = d[i] * Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable("inconsistent ratios around a cycle")
    out = [x if x is not None else Fraction(1) for x in d]
    for i in range(n):
        for j in range(n):
            if out[i] * cartan[i][j] != out[j] * cartan[j][i]:
                raise NotSymmetrizable(f"d_i a_ij != d_j a_ji at ({i + 1},{j + 1})")
    if any(x <= 0 for x in out):
        raise NotSymmetrizable("symmetrizer is not positive")
    return tuple(out)


def validate_root_datum(name, n, m, cartan, roots, pairing, fundamentals=None) -> RootDatum:
    """Check every root-datum axiom and return the validated datum.

    `roots` is given column-wise (entry j holds the m coordinates of
    alpha_{j+1}); `pairing` row-wise (entry i holds the functional of
    alpha_{i+1}^vee).  Raises NotGCM, NotSymmetrizable, or PairingInconsistent.
    """
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    if len(cartan) != n or any(len(r) != n for r in cartan):
        raise NotGCM(f"Cartan matrix must be {n}x{n}")
    for i in range(n):
        if cartan[i][i] != 2:
            raise NotGCM(f"diagonal entry a_{i + 1}{i + 1} = {cartan[i][i]} != 2")
        for j in range(n):
            if i != j and cartan[i][j] > 0:
                raise NotGCM(f"off-diagonal entry a_{i + 1}{j + 1} > 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise NotGCM(f"zero pattern asymmetric at ({i + 1},{j + 1})")
    sym = _symmetrizer(cartan)
    roots = tuple(vec(col) for col in roots)
    pairing = tuple(vec(row) for row in pairing)
    if len(roots) != n or any(len(col) != m for col in roots):
        raise PairingInconsistent(f"root matrix must have {n} columns of length {m}")
    if len(pairing) != n or any(len(row) != m for row in pairing):
        raise PairingInconsistent(f"pairing matrix must have {n} rows of length {m}")
    for i in range(n):
        for j in range(n):
            got = _dot(pairing[i], roots[j])
            if got != cartan[i][j]:
                raise PairingInconsistent(
                    f"<alpha_{j + 1}, alpha_{i + 1}^vee> = {got} but Cartan says {cartan[i][j]}")
    datum = RootDatum(name=name, n=n, m=m, cartan=cartan, roots=roots,
                      pairing=pairing, sym=sym,
                      fundamentals=None if fundamentals is None
                      else tuple(vec(f) for f in fundamentals))
    datum._root_left_inverse  # raises PairingInconsistent on dependent columns
    return datum


def datum_from_json(obj) -> RootDatum:
    """Build a datum from the documented JSON shape (dict or JSON string).

    The "roots" key holds the m x n matrix whose columns are the simple roots,
    given as m rows of length n; "pairing" holds the n x m matrix row-wise.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    m = int(obj["m"])
    rows = [[parse_rational(x) for x in row] for row in obj["roots"]]
    if len(rows) != m or any(len(r) != n for r in rows):
        raise PairingInconsistent(f'"roots" must be an {m} x {n} matrix (rows of length {n})')
    cols = [tuple(rows[k][j] for k in range(m)) for j in range(n)]
    pairing = [[parse_rational(x) for x in row] for row in obj["pairing"]]
    return validate_root_datum(str(obj.get("name", "custom")), n, m,
                               obj["cartan"], cols, pairing)


def preset(name: str) -> RootDatum:
    """Built-in data: "A1", "A2", ... (simply laced, fundamental-weight
    coordinates) and "GL2", "GL3", ... (rank n-1 in n standard coordinates)."""
    key = name.strip().upper()
    if key.startswith("GL"):
        size = int(key[2:])
        if size < 2:
            raise ValueError("GL presets need size >= 2")
        n = size - 1
        cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
                  for i in range(n)]
        cols = [tuple(Fraction(1) if k == j else (Fraction(-1) if k == j + 1 else Fraction(0))
                      for k in range(size)) for j in range(n)]
        rows = [tuple(Fraction(1) if k == i else (Fraction(-1) if k == i + 1 else Fraction(0))
                      for k in range(size)) for i in range(n)]
        funds = [tuple(Fraction(1) if k <= i else Fraction(0) for k in range(size))
                 for i in range(n)]
        return validate_root_datum(key, n, size, cartan, cols, rows, funds)
    if key.startswith("A"):
        n = int(key[1:])
        if n < 1:
            raise ValueError("A presets need rank >= 1")
        cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
                  for i in range(n)]
        cols = [tuple(Fraction(cartan[k][j]) for k in range(n)) for j in range(n)]
        rows = [tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))
                for i in range(n)]
        funds = [tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))
                 for i in range(n)]
        return validate_root_datum(key, n, n, cartan, cols, rows, funds)
    raise ValueError(f"unknown preset {name!r}")


# ---------------------------------------------------------------------------
# Weyl elements


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, identified by its action on the root lattice.

    Two elements are equal exactly when their integer matrices (and data)
    agree, independent of the words that produced them.  `rword` is the
    canonical reduced word found by descent stripping with smallest-index
    tie-breaking.
    """

    datum: RootDatum
    mat: IntMatrix
    inv: IntMatrix = field(compare=False)
    rword: Word = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.rword)

    @property
    def is_identity(self) -> bool:
        return not self.rword

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.datum is not other.datum and self.datum != other.datum:
            raise ValueError("cannot multiply elements over different data")
        mat = _mat_mul_int(self.mat, other.mat)
        inv = _mat_mul_int(other.inv, self.inv)
        return WeylElement(self.datum, mat, inv, _strip_word(self.datum, mat))

    def right_descent(self, i: int) -> bool:
        """True when l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
        col = tuple(row[i - 1] for row in self.mat)
        return all(x <= 0 for x in col)

    def left_descent(self, i: int) -> bool:
        """True when l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0."""
        col = tuple(row[i - 1] for row in self.inv)
        return all(x <= 0 for x in col)

    def act_weight(self, mu: Coords) -> Coords:
        for i in reversed(self.rword):
            mu = self.datum.reflect_weight(i, mu)
        return mu

    def act_root(self, coeffs: RootCoords) -> RootCoords:
        return _mat_vec(self.mat, coeffs)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.datum, self.inv, self.mat,
                           _strip_word(self.datum, self.inv))

    def support(self) -> frozenset[int]:
        return frozenset(self.rword)

    def __repr__(self) -> str:
        return "e" if not self.rword else "*".join(f"s{i}" for i in self.rword)


def _strip_word(datum: RootDatum, mat: IntMatrix) -> Word:
    """Canonical reduced word by repeatedly removing the smallest right descent."""
    eye = _identity_int(datum.n)
    rec: list[int] = []
    cur = mat
    while cur != eye:
        if len(rec) > _STRIP_CAP:
            raise RuntimeError("descent stripping did not terminate")
        for i in range(1, datum.n + 1):
            col = tuple(row[i - 1] for row in cur)
            if all(x <= 0 for x in col):
                rec.append(i)
                cur = _mat_mul_int(cur, datum._gen_matrix(i))
                break
        else:
            raise RuntimeError("non-identity element with no right descent")
    return tuple(reversed(rec))


def length_and_reduced_word(w: WeylElement) -> tuple[int, Word]:
    return w.length, w.rword


def check_reduced(datum: RootDatum, word) -> WeylElement:
    """Build the element of `word` and insist the word is reduced."""
    word = tuple(int(i) for i in word)
    w = datum.weyl(word)
    if w.length != len(word):
        raise WordNotReduced(f"word {word} has length {w.length} < {len(word)}")
    return w


def support(w: WeylElement) -> frozenset[int]:
    return w.support()


def in_parabolic(w: WeylElement, letters) -> bool:
    """Is w in the standard parabolic subgroup generated by {s_i : i in letters}?"""
    return w.support() <= frozenset(letters)


def _in_parabolic_by_stripping(w: WeylElement, letters) -> bool:
    # Second route, used to cross-check `in_parabolic` in the tests: strip
    # right descents using only the allowed letters and see whether we land
    # exactly at the identity.
    allowed = sorted(set(letters))
    cur = w
    while not cur.is_identity:
        for i in allowed:
            if cur.right_descent(i):
                cur = cur * w.datum.simple(i)
                break
        else:
            return False
    return True


def stabilizer_letters(datum: RootDatum, lam: Coords) -> frozenset[int]:
    """Indices i with <lam, alpha_i^vee> = 0, generating the stabilizer of lam."""
    datum.check_dominant_integral(lam)
    return frozenset(i for i in range(1, datum.n + 1) if datum.pair(lam, i) == 0)


def min_coset_rep(w: WeylElement, lam: Coords) -> WeylElement:
    """The minimal-length representative of w W_lam for dominant integral lam."""
    letters = sorted(stabilizer_letters(w.datum, lam))
    cur = w
    changed = True
    while changed:
        changed = False
        for i in letters:
            if cur.right_descent(i):
                cur = cur * w.datum.simple(i)
                changed = True
                break
    return cur


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order, by the standard left-descent recursion."""
    if u.length >= w.length:
        return u == w
    i = next(i for i in range(1, w.datum.n + 1) if w.left_descent(i))
    si = w.datum.simple(i)
    sw = si * w
    if u.left_descent(i):
        return bruhat_leq(si * u, sw)
    return bruhat_leq(u, sw)


def weyl_group_elements(datum: RootDatum, cap: int = 50_000) -> list[WeylElement]:
    """Every element of a finite Weyl group, sorted by (length, reduced word)."""
    seen = {datum.identity()}
    frontier = [datum.identity()]
    while frontier:
        if len(seen) > cap:
            raise ValueError("Weyl group enumeration requires finite type")
        nxt = []
        for w in frontier:
            for i in range(1, datum.n + 1):
                x = w * datum.simple(i)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen, key=lambda w: (w.length, w.rword))


# ---------------------------------------------------------------------------
# weight parsing and printing (shared by the CLI and the reports)

_OMEGA_NAMES = ("ω", "omega", "w")  # in decreasing parse priority


def parse_weight(datum: RootDatum, text: str) -> Coords:
    """Parse "0", "omega2", "ω1+ω2", "2ω1-ω3", or a coordinate vector "1,0,2"."""
    s = text.strip()
    if not s:
        raise ValueError("empty weight")
    if "," in s:
        return vec([parse_rational(p) for p in s.split(",")])
    if s == "0":
        return vzero(datum.m)
    total = vzero(datum.m)
    for chunk in s.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        body = None
        for nm in _OMEGA_NAMES:
            pos = chunk.find(nm)
            if pos >= 0:
                coeff = chunk[:pos].strip()
                body = (Fraction(coeff) if coeff else Fraction(1), int(chunk[pos + len(nm):]))
                break
        if body is None:
            raise ValueError(f"cannot parse weight term {chunk!r}")
        c, idx = body
        if not 1 <= idx <= datum.n:
            raise ValueError(f"fundamental weight index {idx} out of range")
        total = vadd(total, vscale(sign * c, datum.fundamental_weight(idx)))
    return total


def parse_word(text: str) -> Word:
    """Parse "2,1,3,2" (or "" for the identity) as a 1-based Weyl word."""
    s = text.strip()
    if not s or s.lower() in {"e", "id"}:
        return ()
    return tuple(int(p) for p in s.split(","))


def weight_str(mu: Coords) -> str:
    return "(" + ",".join(rational_str(x) for x in mu) + ")"


def word_str(word: Word) -> str:
    return "e" if not word else " ".join(f"s{i}" for i in word)
