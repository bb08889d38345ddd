"""Exact arithmetic over GF(p), GF(p^n) and the rationals, with dense linear algebra.

Field elements are stored as *raw values* whose zero is ``0`` and whose one
is ``1`` in every field:

* GF(p): an ``int`` in ``range(p)``;
* GF(p^n): an ``int`` in ``range(p**n)`` encoding the coefficient list
  ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}`` of a polynomial in the generator
  of the field (a root of the modulus);
* QQ: a :class:`fractions.Fraction`.

All arithmetic goes through a :class:`Field` object. :class:`FieldElement`
wraps a raw value for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import kernels

Raw = int | Fraction


class FieldError(ValueError):
    """Unsupported field parameters or a cross-field operation."""


class UnsupportedOperation(RuntimeError):
    """Operation not defined for the given field."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists low -> high -------------------


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _ptrim([x % p for x in a])
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _ptrim([x % p for x in a])
    b = _ptrim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _ptrim(out)


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    f = list(f)
    n = len(f) - 1
    if n < 1 or f[-1] % p != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for r in _prime_factors(n):
        h = _psub(_ppowmod(x, p ** (n // r), f, p), x, p)
        if len(_pgcd(list(f), h, p)) != 1:
            return False
    return True


def _decode(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, d = divmod(a, p)
        out.append(d)
    return out


def _encode(digits: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(list(digits)):
        v = v * p + d % p
    return v


def _is_primitive_mod(f: Sequence[int], p: int) -> bool:
    n = len(f) - 1
    q1 = p**n - 1
    x = [0, 1]
    if _ppowmod(x, q1, f, p) != [1]:
        return False
    return all(_ppowmod(x, q1 // r, f, p) != [1] for r in _prime_factors(q1))


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """First monic primitive polynomial of degree ``n`` over GF(p).

    Candidates are enumerated with the coefficient vector
    ``(c_{n-1}, ..., c_0)`` read as a base-``p`` number in increasing order.
    """
    if n == 1:
        return (0, 1)
    for code in range(p**n):
        f = tuple(_decode(code, p, n)) + (1,)
        if f[0] == 0:
            continue
        if is_irreducible_mod_p(f, p) and _is_primitive_mod(f, p):
            return f
    raise FieldError(f"no primitive polynomial of degree {n} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic, extension degree and modulus of a supported field.

    ``characteristic == 0`` means the rationals. ``modulus`` lists the
    coefficients (low to high) of the monic irreducible defining GF(p^n);
    it is filled in deterministically when omitted.
    """

    characteristic: int
    extension_degree: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        p, n = self.characteristic, self.extension_degree
        if p == 0:
            if n != 1 or self.modulus is not None:
                raise FieldError("QQ has no proper extensions here")
            return
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if n < 1:
            raise FieldError("extension degree must be positive")
        if n == 1:
            if self.modulus not in (None, (0, 1)):
                raise FieldError("prime fields take no modulus")
            object.__setattr__(self, "modulus", None)
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(p, n))
        mod = tuple(int(c) % p for c in self.modulus)
        if len(mod) != n + 1 or not is_irreducible_mod_p(mod, p):
            raise FieldError(f"modulus {self.modulus} is not monic irreducible of degree {n}")
        object.__setattr__(self, "modulus", mod)

    @classmethod
    def gf(cls, p: int, n: int = 1, modulus: Sequence[int] | None = None) -> "FieldSpec":
        return cls(p, n, tuple(modulus) if modulus is not None else None)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @property
    def order(self) -> int | None:
        if self.characteristic == 0:
            return None
        return self.characteristic**self.extension_degree

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "QQ"
        if self.extension_degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic},{self.extension_degree})"


class Field:
    """Arithmetic on raw values of one field. Obtain instances via :func:`get_field`."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.characteristic
        self.n = spec.extension_degree
        self.q = spec.order
        self.is_prime = self.p > 0 and self.n == 1
        if self.p > 0 and self.n > 1:
            self._build_tables()

    def _build_tables(self) -> None:
        p, n, f = self.p, self.n, self.spec.modulus
        q1 = self.q - 1
        factors = _prime_factors(q1)
        gen = None
        for code in range(p, self.q):
            g = _decode(code, p, n)
            if _ppowmod(g, q1, f, p) != [1]:
                continue
            if all(_ppowmod(g, q1 // r, f, p) != [1] for r in factors):
                gen = g
                break
        assert gen is not None
        exp = [0] * q1
        log = [0] * self.q
        cur = [1]
        for k in range(q1):
            code = _encode(cur + [0] * (n - len(cur)), p)
            exp[k] = code
            log[code] = k
            cur = _pmulmod(cur, gen, f, p)
        self._exp = exp
        self._log = log

    # -- basic arithmetic --------------------------------------------------

    zero: Raw = 0
    one: Raw = 1

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime:
            return (a + b) % self.p
        if self.p == 0:
            return a + b
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, 1)

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime:
            return (a - b) % self.p
        if self.p == 0:
            return a - b
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, -1)

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + sign * db) % p) * place
            place *= p
        return out

    def neg(self, a: Raw) -> Raw:
        return self.sub(0, a)

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime:
            return a * b % self.p
        if self.p == 0:
            return a * b
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(a, self.p - 2, self.p)
        if self.p == 0:
            return Fraction(1) / a
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.is_prime:
            return pow(a, e, self.p)
        if self.p == 0:
            return a**e
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def from_int(self, c: int) -> Raw:
        if self.p == 0:
            return Fraction(c)
        return c % self.p

    def from_fraction(self, c: Fraction | int) -> Raw:
        c = Fraction(c)
        if self.p == 0:
            return c
        if c.denominator % self.p == 0:
            raise FieldError(f"{c} has no image in {self.spec}")
        return self.div(self.from_int(c.numerator), self.from_int(c.denominator))

    def from_digits(self, digits: Sequence[int]) -> Raw:
        """Element ``sum c_i g^i`` from coefficients over the prime field."""
        if self.p == 0 or len(digits) > self.n:
            raise FieldError(f"coefficient list {list(digits)} does not fit {self.spec}")
        return _encode(digits, self.p)

    def digits(self, a: Raw) -> list[int]:
        return _decode(a, self.p, self.n)

    def in_prime_field(self, a: Raw) -> bool:
        return self.p == 0 or a < self.p

    # -- finite-field extras -------------------------------------------------

    def elements(self) -> Iterator[Raw]:
        if self.q is None:
            raise UnsupportedOperation("QQ is infinite")
        return iter(range(self.q))

    def frobenius(self, a: Raw) -> Raw:
        if self.p == 0:
            raise UnsupportedOperation("Frobenius needs positive characteristic")
        return self.pow(a, self.p)

    def frobenius_inverse(self, a: Raw, times: int = 1) -> Raw:
        """Inverse of ``a -> a^(p^times)``."""
        if self.p == 0:
            raise UnsupportedOperation("Frobenius needs positive characteristic")
        shift = (-times) % self.n
        return self.pow(a, self.p**shift)

    def format(self, a: Raw) -> str:
        if self.p == 0:
            return str(a)
        if a < self.p:
            return str(a - self.p) if self.p > 2 and self.p - a < a else str(a)
        return "[" + ",".join(str(d) for d in self.digits(a)) + "]"

    def __repr__(self) -> str:
        return f"Field({self.spec})"


@lru_cache(maxsize=None)
def get_field(spec: FieldSpec) -> Field:
    return Field(spec)


def embed_field(small: FieldSpec, big: FieldSpec) -> "callable":
    """Ring embedding of raw values of ``small`` into ``big``.

    Raises :class:`FieldError` when no embedding exists. For extensions the
    image of the generator is the smallest root of its modulus in ``big``.
    """
    if small == big:
        return lambda a: a
    if small.characteristic != big.characteristic:
        raise FieldError(f"{small} does not embed in {big}")
    if small.characteristic == 0:
        return lambda a: a
    if big.extension_degree % small.extension_degree:
        raise FieldError(f"{small} does not embed in {big}")
    fs, fb = get_field(small), get_field(big)
    if small.extension_degree == 1:
        return lambda a: a
    root = None
    for cand in fb.elements():
        acc = 0
        for c in reversed(small.modulus):
            acc = fb.add(fb.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    assert root is not None
    powers = [fb.pow(root, i) for i in range(small.extension_degree)]

    def embed(a: Raw) -> Raw:
        acc = 0
        for d, pw in zip(fs.digits(a), powers):
            if d:
                acc = fb.add(acc, fb.mul(d, pw))
        return acc

    return embed


@dataclass(frozen=True)
class FieldElement:
    """A raw value tagged with its field, with the usual operators."""

    spec: FieldSpec
    value: Raw

    @property
    def field(self) -> Field:
        return get_field(self.spec)

    def _coerce(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError(f"cannot combine {self.spec} with {other.spec}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.spec, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.spec, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.field.pow(self.value, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.from_fraction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    @property
    def characteristic(self) -> int:
        return self.spec.characteristic

    def __str__(self) -> str:
        return self.field.format(self.value)


# -- dense linear algebra -----------------------------------------------------


def rref(F: Field, rows: Sequence[Sequence[Raw]], ncols: int) -> tuple[list[list[Raw]], list[int]]:
    """Reduced row echelon form; pivot = first nonzero entry in column order.

    Returns ``(nonzero_rows, pivot_columns)``.
    """
    if F.is_prime:
        return kernels.rref_mod_p([list(r) for r in rows], ncols, F.p)
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(work)
    mul, sub = F.mul, F.sub
    for col in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if work[i][col] != 0), -1)
        if pivot < 0:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        inv = F.inv(prow[col])
        if inv != 1:
            prow[col:] = [mul(x, inv) for x in prow[col:]]
        for i in range(nrows):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                row = work[i]
                for j in range(col, ncols):
                    if prow[j] != 0:
                        row[j] = sub(row[j], mul(f, prow[j]))
        pivots.append(col)
        r += 1
    return work[:r], pivots


def nullspace(F: Field, rows: Sequence[Sequence[Raw]], ncols: int) -> list[list[Raw]]:
    """Basis of ``{x : rows . x = 0}``, one vector per free column."""
    red, pivots = rref(F, rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for row, pc in zip(red, pivots):
            if row[free] != 0:
                v[pc] = F.neg(row[free])
        basis.append(v)
    return basis


def solve_raw(
    F: Field, a: Sequence[Sequence[Raw]], b: Sequence[Sequence[Raw]], ncols: int
) -> tuple[list[list[Raw]] | None, int]:
    """Solve ``a x = b`` for a matrix ``b``; returns (solution or None, rank of a).

    Free variables are set to zero.
    """
    nb = len(b[0]) if b else 0
    aug = [list(ar) + list(br) for ar, br in zip(a, b)]
    red, pivots = rref(F, aug, ncols + nb)
    rank = sum(1 for pc in pivots if pc < ncols)
    if any(pc >= ncols for pc in pivots):
        return None, rank
    x = [[F.zero] * nb for _ in range(ncols)]
    for row, pc in zip(red, pivots):
        x[pc] = list(row[ncols:])
    return x, rank


@dataclass(frozen=True)
class Matrix:
    """Dense matrix of raw values over one field."""

    spec: FieldSpec
    rows: tuple[tuple[Raw, ...], ...]
    ncols: int = dc_field(default=-1)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ncols < 0:
            object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_entries(cls, spec: FieldSpec, entries: Iterable[Iterable]) -> "Matrix":
        F = get_field(spec)
        rows = []
        for r in entries:
            row = []
            for x in r:
                if isinstance(x, FieldElement):
                    row.append(x.value)
                else:
                    row.append(F.from_fraction(x))
            rows.append(tuple(row))
        return cls(spec, tuple(rows), len(rows[0]) if rows else 0)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls(spec, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, spec: FieldSpec, values: Sequence[Raw]) -> "Matrix":
        return cls(spec, tuple((v,) for v in values), 1)

    @property
    def field(self) -> Field:
        return get_field(self.spec)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.spec != other.spec:
            raise FieldError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        out = []
        cols = list(zip(*other.rows)) if other.rows else [() for _ in range(other.ncols)]
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x != 0]
            row = []
            for c in range(other.ncols):
                acc = F.zero
                col = cols[c]
                for k, x in nz:
                    y = col[k]
                    if y != 0:
                        acc = F.add(acc, F.mul(x, y))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.spec, tuple(out), other.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        red, piv = rref(self.field, self.rows, self.ncols)
        return Matrix(self.spec, tuple(map(tuple, red)), self.ncols), tuple(piv)

    def rank(self) -> int:
        return len(rref(self.field, self.rows, self.ncols)[1])

    def column_vectors(self) -> list[tuple[Raw, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def __str__(self) -> str:
        F = self.field
        return "\n".join("[" + " ".join(F.format(x) for x in r) + "]" for r in self.rows)


def rank(a: Matrix) -> int:
    return a.rank()


def solve_linear_system(a: Matrix, b: Matrix) -> Matrix | None:
    """A solution ``x`` of ``a x = b``, or ``None`` when the system is inconsistent.

    Uniqueness is a separate question: it holds exactly when
    ``rank(a) == a.ncols``.
    """
    if a.spec != b.spec:
        raise FieldError("field mismatch")
    if a.nrows != b.nrows:
        raise ValueError(f"row mismatch: {a.nrows} vs {b.nrows}")
    x, _ = solve_raw(a.field, a.rows, b.rows, a.ncols)
    if x is None:
        return None
    return Matrix(a.spec, tuple(map(tuple, x)), b.ncols)


def kernel_basis(a: Matrix) -> list[Matrix]:
    """Column vectors forming a basis of the null space of ``a``."""
    return [Matrix.column(a.spec, v) for v in nullspace(a.field, a.rows, a.ncols)]


class Subspace:
    """A subspace of ``F^n`` held as reduced echelon rows.

    Coordinates of a member with respect to the stored basis are its entries
    at the pivot columns.
    """

    def __init__(self, F: Field, n: int, vectors: Iterable[Sequence[Raw]] = ()):
        self.F = F
        self.n = n
        red, piv = rref(F, [list(v) for v in vectors], n)
        self.basis: list[tuple[Raw, ...]] = [tuple(r) for r in red]
        self.pivots: list[int] = list(piv)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Raw]) -> list[Raw]:
        """Remainder of ``v`` after clearing every pivot coordinate."""
        F = self.F
        out = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = out[pc]
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        out[j] = F.sub(out[j], F.mul(c, x))
        return out

    def contains(self, v: Sequence[Raw]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coords(self, v: Sequence[Raw]) -> list[Raw]:
        return [v[pc] for pc in self.pivots]

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [i for i in range(self.n) if i not in piv]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))


def frobenius_iterate(x, m: int):
    """Return ``x ** (p ** m)`` for an element of characteristic ``p > 0``.

    ``x`` may be a :class:`FieldElement` or an algebra element; anything
    exposing ``characteristic`` and ``__pow__``.
    """
    p = x.characteristic
    if p == 0:
        raise UnsupportedOperation("Frobenius iteration needs positive characteristic")
    if m < 1:
        raise ValueError("m must be positive")
    y = x
    for _ in range(m):
        y = y**p
    return y


__all__ = [
    "Field",
    "FieldElement",
    "FieldError",
    "FieldSpec",
    "Matrix",
    "Raw",
    "Subspace",
    "UnsupportedOperation",
    "default_modulus",
    "embed_field",
    "frobenius_iterate",
    "get_field",
    "is_irreducible_mod_p",
    "kernel_basis",
    "nullspace",
    "rank",
    "rref",
    "solve_linear_system",
    "solve_raw",
]
