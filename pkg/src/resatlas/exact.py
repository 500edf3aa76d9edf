"""Exact arithmetic kernel: sparse integer polynomials and exact matrices.

Coefficients are Python ints (arbitrary precision) and `fractions.Fraction`
(always reduced, positive denominator).  Polynomials are sparse dicts keyed by
monomials; matrices support fraction-free elimination, symbolic determinants
and rank at rational specializations.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]

# A monomial is a sorted tuple of (variable index, positive exponent) pairs.
Monomial = Tuple[Tuple[int, int], ...]

_ONE_MONOMIAL: Monomial = ()


class VarRegistry:
    """Global registry fixing a total order on variable names.

    The registry index determines the lexicographic component of the graded
    lexicographic monomial order, so creating variables in a fixed order keeps
    printing and term order reproducible.
    """

    def __init__(self) -> None:
        self.names: List[str] = []
        self.index: Dict[str, int] = {}

    def intern(self, name: str) -> int:
        idx = self.index.get(name)
        if idx is None:
            idx = len(self.names)
            self.names.append(name)
            self.index[name] = idx
        return idx

    def name(self, idx: int) -> str:
        return self.names[idx]


REGISTRY = VarRegistry()


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # Graded lexicographic: compare total degree first, then exponents in
    # registry order (higher exponent on an earlier variable sorts first).
    deg = _mono_degree(m)
    expanded = []
    for idx, e in m:
        expanded.append((idx, -e))
    return (-deg, tuple(expanded))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for idx, e in b:
        merged[idx] = merged.get(idx, 0) + e
    return tuple(sorted(merged.items()))


class MPoly:
    """Sparse multivariate polynomial over the integers.

    Terms are stored in a dict mapping monomial -> nonzero int coefficient.
    Two polynomials are equal iff their term dicts are equal (canonical form:
    no zero coefficients are ever stored).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: int) -> "MPoly":
        return MPoly({_ONE_MONOMIAL: c} if c else {})

    @staticmethod
    def var(name: str, power: int = 1) -> "MPoly":
        idx = REGISTRY.intern(name)
        if power < 0:
            raise ValueError("negative power")
        if power == 0:
            return MPoly.const(1)
        return MPoly({((idx, power),): 1})

    @staticmethod
    def coerce(value: "MPoly | int") -> "MPoly":
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int):
            return MPoly.const(value)
        raise TypeError(f"cannot coerce {type(value)!r} to MPoly")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> List[str]:
        seen = set()
        for mono in self.terms:
            for idx, _ in mono:
                seen.add(idx)
        return sorted(REGISTRY.name(i) for i in seen)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(_mono_degree(m) for m in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MPoly | int") -> "MPoly":
        other = MPoly.coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        result = MPoly()
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        result = MPoly()
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "MPoly | int") -> "MPoly":
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other: int) -> "MPoly":
        return MPoly.coerce(other) + (-self)

    def __mul__(self, other: "MPoly | int") -> "MPoly":
        other = MPoly.coerce(other)
        out: Dict[Monomial, int] = {}
        if len(self.terms) > len(other.terms):
            left, right = other, self
        else:
            left, right = self, other
        for mono_a, coeff_a in left.terms.items():
            for mono_b, coeff_b in right.terms.items():
                mono = _mono_mul(mono_a, mono_b)
                s = out.get(mono, 0) + coeff_a * coeff_b
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        result = MPoly()
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- evaluation --------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a full rational point.  Raises on missing variables."""
        point: Dict[int, Fraction] = {}
        for name, value in assignment.items():
            point[REGISTRY.intern(name)] = Fraction(value)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = Fraction(coeff)
            for idx, e in mono:
                if idx not in point:
                    raise KeyError(f"missing variable {REGISTRY.name(idx)!r}")
                term *= point[idx] ** e
            total += term
        return total

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=_mono_key):
            coeff = self.terms[mono]
            factors = []
            for idx, e in mono:
                name = REGISTRY.name(idx)
                factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def mpoly_vars(prefix: str, *shape: int) -> List:
    """Create a list (or nested list) of fresh variables `prefix_i[_j]`."""
    if len(shape) == 1:
        return [MPoly.var(f"{prefix}{i + 1}") for i in range(shape[0])]
    if len(shape) == 2:
        return [
            [MPoly.var(f"{prefix}{i + 1}_{j + 1}") for j in range(shape[1])]
            for i in range(shape[0])
        ]
    raise ValueError("shape must be 1- or 2-dimensional")


Entry = Union[int, Fraction, MPoly]


def _is_numeric(value: Entry) -> bool:
    return isinstance(value, (int, Fraction))


class ExactMatrix:
    """Dense matrix with exact entries (int/Fraction or MPoly)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[Entry]]) -> None:
        self.data: List[List[Entry]] = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix([[0] * cols for _ in range(rows)])

    def is_numeric(self) -> bool:
        return all(_is_numeric(e) for row in self.data for e in row)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                a, b = self.data[i][j], other.data[i][j]
                if isinstance(a, MPoly) or isinstance(b, MPoly):
                    if MPoly.coerce(a if isinstance(a, MPoly) else int(a)) != (
                        b if isinstance(b, MPoly) else MPoly.const(int(b))
                    ):
                        return False
                elif Fraction(a) != Fraction(b):
                    return False
        return True

    def __hash__(self):
        raise TypeError("unhashable")

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc: Entry = 0
                for k in range(self.cols):
                    a = self.data[i][k]
                    b = other.data[k][j]
                    if (isinstance(a, int) and a == 0) or (isinstance(b, int) and b == 0):
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def scale(self, factor: Entry) -> "ExactMatrix":
        return ExactMatrix([[factor * e for e in row] for row in self.data])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        rows = sorted(rows)
        cols = sorted(cols)
        for i in rows:
            if not 0 <= i < self.rows:
                raise IndexError(f"row {i} out of range")
        for j in cols:
            if not 0 <= j < self.cols:
                raise IndexError(f"col {j} out of range")
        return ExactMatrix([[self.data[i][j] for j in cols] for i in rows])

    # -- determinants ------------------------------------------------------

    def det(self) -> Entry:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        if self.rows == 0:
            return 1
        if self.is_numeric():
            return self._det_bareiss()
        return self._det_expansion()

    def _det_bareiss(self) -> Fraction:
        """Fraction-free Bareiss elimination on a common-denominator lift."""
        n = self.rows
        denom = 1
        for row in self.data:
            for e in row:
                if isinstance(e, Fraction):
                    denom = denom * e.denominator // _gcd(denom, e.denominator)
        m = [[int(Fraction(e) * denom) for e in row] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], denom**n)

    _SYMBOLIC_DET_LIMIT = 8

    def _det_expansion(self) -> MPoly:
        n = self.rows
        if n > self._SYMBOLIC_DET_LIMIT:
            raise ValueError(f"symbolic determinant limited to {self._SYMBOLIC_DET_LIMIT}x{self._SYMBOLIC_DET_LIMIT}")
        entries = [[MPoly.coerce(e) if not isinstance(e, MPoly) else e for e in row] for row in self.data]
        cache: Dict[Tuple[int, Tuple[int, ...]], MPoly] = {}

        def expand(row: int, cols: Tuple[int, ...]) -> MPoly:
            if not cols:
                return MPoly.const(1)
            key = (row, cols)
            hit = cache.get(key)
            if hit is not None:
                return hit
            acc = MPoly()
            for pos, j in enumerate(cols):
                coeff = entries[row][j]
                if coeff.is_zero():
                    continue
                rest = expand(row + 1, cols[:pos] + cols[pos + 1 :])
                term = coeff * rest
                acc = acc + term if pos % 2 == 0 else acc - term
            cache[key] = acc
            return acc

        return expand(0, tuple(range(n)))

    def minor(self, rows: Iterable[int], cols: Iterable[int]) -> Entry:
        rows = sorted(rows)
        cols = sorted(cols)
        if len(rows) != len(cols):
            raise ValueError("minor needs equally many rows and columns")
        return self.submatrix(rows, cols).det()

    # -- rank --------------------------------------------------------------

    def rank(self) -> int:
        """Rank over the rationals (numeric entries only)."""
        if not self.is_numeric():
            raise ValueError("rank requires numeric entries; use rank_at")
        m = [[Fraction(e) for e in row] for row in self.data]
        rank = 0
        row_idx = 0
        for col in range(self.cols):
            pivot = None
            for i in range(row_idx, self.rows):
                if m[i][col] != 0:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[row_idx], m[pivot] = m[pivot], m[row_idx]
            pv = m[row_idx][col]
            for i in range(row_idx + 1, self.rows):
                if m[i][col]:
                    factor = m[i][col] / pv
                    for j in range(col, self.cols):
                        m[i][j] -= factor * m[row_idx][j]
            row_idx += 1
            rank += 1
            if row_idx == self.rows:
                break
        return rank

    def substitute(self, assignment: Mapping[str, Scalar]) -> "ExactMatrix":
        out = []
        for row in self.data:
            new_row: List[Entry] = []
            for e in row:
                if isinstance(e, MPoly):
                    new_row.append(e.substitute(assignment))
                else:
                    new_row.append(Fraction(e))
            out.append(new_row)
        return ExactMatrix(out)

    def rank_at(self, assignment: Mapping[str, Scalar]) -> int:
        return self.substitute(assignment).rank()

    def is_zero(self) -> bool:
        for row in self.data:
            for e in row:
                if isinstance(e, MPoly):
                    if not e.is_zero():
                        return False
                elif e != 0:
                    return False
        return True

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.data) + "]"

    __repr__ = __str__


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def seeded_random_point(
    seed: int,
    variables: Sequence[str],
    avoid: Sequence[MPoly] = (),
    max_tries: int = 200,
) -> Dict[str, Fraction]:
    """Deterministic rational point with every polynomial in `avoid` nonzero.

    Coordinates are integers drawn from [-1000, 1000]; the range widens if the
    avoidance constraints keep failing (they essentially never do for the
    generic minors this supports).
    """
    rng = random.Random(seed)
    span = 1000
    for attempt in range(max_tries):
        point = {name: Fraction(rng.randint(-span, span)) for name in variables}
        if all(p.substitute(point) != 0 for p in avoid):
            return point
        if attempt % 20 == 19:
            span *= 2
    raise RuntimeError("seeded_random_point: retry budget exhausted")
