"""Exact arithmetic in GF(p^k) and dense univariate polynomials over it.

Field elements are plain integers in [0, q).  The base-p digits of an element
(least significant first) are the coefficients of its representative
polynomial, so element 5 in GF(3^2) is 2 + 1*x.  This packing makes vectors
and matrices of elements directly comparable and hashable.

Extension fields keep discrete-log tables for multiplication, so q = p^k is
capped at 2^16 for k > 1; prime fields have no such cap.
"""

from __future__ import annotations


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_EXT_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 1 << 10


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for anything near machine-word size."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldCtx:
    """A finite field GF(p^k) with all element-level arithmetic.

    Characteristic 2 is admitted only with ``exploratory=True``; the primary
    decision procedures assume odd characteristic.
    """

    def __init__(self, p, k=1, modulus=None, exploratory=False):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if p == 2 and not exploratory:
            raise ValueError("characteristic 2 requires exploratory=True")
        self.p = p
        self.k = k
        self.q = p**k
        self.exploratory = bool(exploratory)
        if k == 1:
            if modulus is not None:
                raise ValueError("modulus only applies to extension fields (k > 1)")
            self.modulus = None
            self._exp = self._log = self._add_table = None
        else:
            if modulus is None:
                raise ValueError("extension field needs a modulus polynomial")
            if self.q > _EXT_TABLE_LIMIT:
                raise ValueError(f"extension field too large (q = {self.q} > {_EXT_TABLE_LIMIT})")
            self.modulus = self._check_modulus(modulus)
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _check_modulus(self, modulus):
        base = FieldCtx(self.p, exploratory=self.exploratory) if self.k > 1 else self
        if isinstance(modulus, Poly):
            if modulus.field.p != self.p or modulus.field.k != 1:
                raise ValueError("modulus must live over the prime field GF(p)")
            coeffs = modulus.coeffs
        else:
            coeffs = tuple(c % self.p for c in modulus)
            while coeffs and coeffs[-1] == 0:
                coeffs = coeffs[:-1]
        if len(coeffs) != self.k + 1:
            raise ValueError(f"modulus must have degree {self.k}")
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        f = Poly(base, coeffs)
        if not _is_irreducible(f):
            raise ValueError(f"modulus {list(coeffs)} is reducible over GF({self.p})")
        return coeffs

    def _build_tables(self):
        q = self.q
        # find a generator of the multiplicative group by raw polynomial arithmetic
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._mul_raw(x, g)
            if len(powers) == q - 1:
                break
        else:  # pragma: no cover - the group is always cyclic
            raise RuntimeError("no multiplicative generator found")
        self._exp = powers
        log = [0] * q
        for i, v in enumerate(powers):
            log[v] = i
        self._log = log
        if q <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self._add_digits(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add_table = None

    def _mul_raw(self, a, b):
        # schoolbook product of digit vectors, reduced by the monic modulus
        p, k = self.p, self.k
        da, db = self.to_digits(a), self.to_digits(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self.from_digits(prod[:k])

    def _add_digits(self, a, b):
        digits = [(x + y) % self.p for x, y in zip(self.to_digits(a), self.to_digits(b))]
        return self.from_digits(digits)

    # -- element arithmetic --------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.k == 1:
            return -a % self.p
        return self.from_digits([-d % self.p for d in self.to_digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e % (self.p - 1) if e else 0, self.p)
        return self._exp[self._log[a] * e % (self.q - 1)]

    def pth_root(self, a):
        """Inverse of the x -> x^p map (the field is perfect)."""
        return self.pow(a, self.p ** (self.k - 1))

    def elements(self):
        return range(self.q)

    # -- packing -------------------------------------------------------------

    def to_digits(self, a):
        digits = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return digits

    def from_digits(self, digits):
        value = 0
        for d in reversed(digits):
            value = value * self.p + d % self.p
        return value

    def coerce(self, value):
        """Reduce an integer into the field (digit-wise for extensions)."""
        if self.k == 1:
            return value % self.p
        if 0 <= value < self.q:
            return value
        raise ValueError(f"{value} is not an element of {self.descriptor()}")

    # -- identity ------------------------------------------------------------

    def descriptor(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; " + ",".join(str(c) for c in self.modulus) + ")"

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldCtx({self.descriptor()})"


def field_new(p, k=1, modulus=None, exploratory=False) -> FieldCtx:
    """Build a verified GF(p^k) context; see FieldCtx for the conventions."""
    return FieldCtx(p, k, modulus, exploratory)


def parse_field(text, exploratory=False) -> FieldCtx:
    """Parse a field descriptor: ``GF(p)`` or ``GF(p^k; c0,c1,...,ck)``."""
    s = text.strip()
    if not (s.startswith("GF(") and s.endswith(")")):
        raise ValueError(f"bad field descriptor {text!r}")
    body = s[3:-1]
    if ";" in body:
        head, _, tail = body.partition(";")
        if "^" not in head:
            raise ValueError(f"bad field descriptor {text!r}: modulus without p^k")
        p_s, _, k_s = head.partition("^")
        p, k = int(p_s), int(k_s)
        coeffs = tuple(int(c) for c in tail.replace(" ", "").split(",") if c != "")
        return FieldCtx(p, k, coeffs, exploratory)
    if "^" in body:
        raise ValueError(f"bad field descriptor {text!r}: extension field needs a modulus")
    return FieldCtx(int(body), exploratory=exploratory)


class Poly:
    """Dense univariate polynomial over a FieldCtx, constant term first.

    Immutable; the zero polynomial has empty coeffs and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        return cls(field, (0,) * degree + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quo = [0] * (dq + 1)
        lead_inv = F.inv(other.coeffs[-1])
        for i in range(dq, -1, -1):
            c = F.mul(rem[i + other.degree], lead_inv)
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = F.sub(rem[i + j], F.mul(c, b))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def _check(self, other):
        if not isinstance(other, Poly) or other.field != self.field:
            raise TypeError("polynomials over different fields")

    def eval(self, x):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        return self * self.field.inv(self.coeffs[-1])

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(c, i % F.p) for i, c in enumerate(self.coeffs) if i > 0])

    def pow_mod(self, e, modulus):
        """self**e reduced mod ``modulus`` by square and multiply."""
        result = Poly.one(self.field) % modulus
        base = self % modulus
        while e > 0:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __repr__(self):
        if self.is_zero:
            return f"Poly(0 over {self.field.descriptor()})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return f"Poly({' + '.join(terms)} over {self.field.descriptor()})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _pth_root_poly(f: Poly) -> Poly:
    # f must be g(t^p) for some g; take coefficient-wise p-th roots of g
    F = f.field
    p = F.p
    coeffs = []
    for i in range(0, f.degree + 1, p):
        coeffs.append(F.pth_root(f[i]))
    return Poly(F, coeffs)


def radical(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f.

    Characteristic-p pitfall: when the derivative vanishes, f = g(t^p) is a
    perfect p-th power; descend through coefficient-wise p-th roots instead of
    dividing by gcd(f, f').
    """
    if f.is_zero:
        raise ValueError("radical of the zero polynomial")
    f = f.monic()
    if f.degree <= 0:
        return Poly.one(f.field)
    d = f.derivative()
    if d.is_zero:
        return radical(_pth_root_poly(f))
    g = poly_gcd(f, d)
    if g.degree == 0:
        return f
    w = f // g
    r = g
    while True:
        c = poly_gcd(r, w)
        if c.degree == 0:
            break
        r = r // c
    if r.degree == 0:
        return w.monic()
    # r collects exactly the factors whose multiplicity is divisible by p
    return (w * radical(_pth_root_poly(r))).monic()


def splits_over(f: Poly, field: FieldCtx | None = None) -> bool:
    """True iff f factors into linear factors over its field.

    Decided by whether the squarefree part of f divides t^q - t, the product
    of all monic linear polynomials.
    """
    if field is not None and field != f.field:
        raise ValueError("polynomial does not live over the given field")
    if f.is_zero:
        raise ValueError("the zero polynomial has no splitting verdict")
    rad = radical(f)
    if rad.degree <= 0:
        return True
    if rad.degree > f.field.q:
        return False
    x = Poly.x(f.field)
    return x.pow_mod(f.field.q, rad) == x % rad


def roots_with_multiplicity(f: Poly) -> list[tuple[int, int]]:
    """All roots of f in its field, with multiplicities, ascending by element."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no root list")
    out = []
    F = f.field
    for z in F.elements():
        if f.eval(z) != 0:
            continue
        lin = Poly(F, (F.neg(z), 1))
        mult = 0
        g = f
        while True:
            quo, rem = divmod(g, lin)
            if not rem.is_zero:
                break
            mult += 1
            g = quo
        out.append((z, mult))
    return out


def _is_irreducible(f: Poly) -> bool:
    # gcd(t^(p^i) - t, f) = 1 for i <= deg/2, plus f | t^(p^deg) - t
    F = f.field
    k = f.degree
    if k <= 0:
        return False
    if k == 1:
        return True
    x = Poly.x(F)
    for i in range(1, k // 2 + 1):
        xq = x.pow_mod(F.p**i, f)
        if poly_gcd(xq - x, f).degree != 0:
            return False
    return x.pow_mod(F.p**k, f) == x % f
