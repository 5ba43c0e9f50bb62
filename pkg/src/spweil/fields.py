"""Exact arithmetic in coefficient fields carrying a primitive r-th root of unity.

Three field families are supported, all exact (no floating point anywhere):

* the cyclotomic field Q(theta) for an odd prime r.  Elements are stored as
  an integer coefficient vector for 1, theta, ..., theta^(r-2) over a single
  positive denominator, reduced modulo the r-th cyclotomic polynomial and
  normalised so that gcd(content, denominator) = 1.  Structural equality of
  the stored value is field equality.
* prime fields GF(p) with p = 1 (mod r).  Elements are residues in [0, p).
* extension fields GF(p^k) with r | p^k - 1 and p != r.  Elements are
  coefficient tuples of length k (constant term first) modulo a monic
  irreducible polynomial.

Element values are plain hashable Python objects; all arithmetic goes through
the owning FieldContext.  Contexts are immutable after construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction


class InvalidFieldSpec(ValueError):
    """The field specification violates a divisibility or irreducibility requirement."""


@dataclass(frozen=True)
class FieldSpec:
    """Description of a coefficient field; kind is one of
    "cyclotomic", "prime", "extension", "auto-prime", "auto-char2"."""

    kind: str
    r: int
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None  # ascending coefficients, monic


# ---------------------------------------------------------------------------
# integer / polynomial helpers


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n >= 1 by trial division."""
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


def legendre(a, r):
    """Legendre symbol (a|r) for an odd prime r, via Euler's criterion."""
    a %= r
    if a == 0:
        return 0
    t = pow(a, (r - 1) // 2, r)
    return 1 if t == 1 else -1


def smallest_primitive_root(p):
    facs = prime_factors(p - 1)
    for g in itertools.count(2):
        if all(pow(g, (p - 1) // q, p) != 1 for q in facs):
            return g
    raise AssertionError


# polynomials over GF(p): lists/tuples of ascending coefficients


def _poly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mulmod(a, b, mod, p):
    # mod is monic of degree k; result has degree < k
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    k = len(mod) - 1
    for m in range(len(out) - 1, k - 1, -1):
        c = out[m]
        if c:
            out[m] = 0
            for i in range(k):
                out[m - k + i] = (out[m - k + i] - c * mod[i]) % p
    return _poly_trim(out)


def _poly_powmod(a, e, mod, p):
    result = [1]
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(_poly_trim(a)), list(_poly_trim(b))
    while b:
        # a mod b
        inv_lead = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv_lead % p
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
            a = list(_poly_trim(a))
        a, b = b, a
    return a


def is_irreducible(f, p):
    """Rabin irreducibility test for a monic polynomial f (ascending coeffs) over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) == x (mod f)
    t = x
    for _ in range(k):
        t = _poly_powmod(t, p, f, p)
    if _poly_trim([(a - b) % p for a, b in itertools.zip_longest(t, x, fillvalue=0)]):
        return False
    for q in prime_factors(k):
        t = x
        for _ in range(k // q):
            t = _poly_powmod(t, p, f, p)
        diff = [(a - b) % p for a, b in itertools.zip_longest(t, x, fillvalue=0)]
        g = _poly_gcd(diff, f, p)
        if len(g) != 1:
            return False
    return True


def find_irreducible_polynomial(p, k):
    """Lexicographically smallest monic irreducible of degree k over GF(p)
    (non-leading coefficients compared high-degree first).  Returns ascending
    coefficients of length k+1."""
    if not is_prime(p):
        raise InvalidFieldSpec(f"{p} is not prime")
    if k < 1:
        raise InvalidFieldSpec("degree must be >= 1")
    for n in range(p ** k):
        digits = []
        m = n
        for _ in range(k):
            digits.append(m % p)
            m //= p
        f = tuple(digits) + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# field contexts


class FieldContext:
    """Base class: exact field arithmetic plus a distinguished primitive
    r-th root of unity.  Subclasses fix the element encoding."""

    kind = None  # "cyclotomic" | "prime" | "extension"
    char = None

    # -- arithmetic interface (element values are plain hashable objects) --

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, n):
        raise NotImplementedError

    # -- the distinguished root of unity --

    @property
    def theta(self):
        return self.theta_pow[1]

    @property
    def theta_pow(self):
        """Tuple (theta^0, ..., theta^(r-1))."""
        cached = getattr(self, "_theta_pow", None)
        if cached is None:
            t = self._compute_theta()
            powers = [self.one]
            for _ in range(self.r - 1):
                powers.append(self.mul(powers[-1], t))
            cached = tuple(powers)
            self._theta_pow = cached
        return cached

    def theta_power(self, e):
        return self.theta_pow[e % self.r]

    def dlog_theta(self, a):
        """Exponent e in [0, r) with a = theta^e, or None."""
        table = getattr(self, "_dlog", None)
        if table is None:
            table = {v: i for i, v in enumerate(self.theta_pow)}
            self._dlog = table
        return table.get(a)

    # -- serialization --

    def serialize_elem(self, a):
        raise NotImplementedError

    def parse_elem(self, s):
        raise NotImplementedError

    def spec_json(self):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError


class CyclotomicContext(FieldContext):
    """Q(theta) for theta a primitive r-th root of unity, r an odd prime.

    Elements are pairs (nums, den): nums a tuple of r-1 integers (the
    coefficients of 1, theta, ..., theta^(r-2)), den a positive integer with
    gcd(gcd(nums), den) = 1.
    """

    kind = "cyclotomic"
    char = 0

    def __init__(self, r):
        if not is_prime(r) or r == 2:
            raise InvalidFieldSpec(f"r = {r} must be an odd prime")
        self.r = r
        self._d = r - 1
        self.zero = ((0,) * self._d, 1)
        self.one = ((1,) + (0,) * (self._d - 1), 1)
        self.spec = FieldSpec("cyclotomic", r)

    def _norm(self, nums, den):
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        if den != 1:
            g = den
            for x in nums:
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                nums = [x // g for x in nums]
                den //= g
        return (tuple(nums), den)

    def add(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._norm([x + y for x, y in zip(na, nb)], da)
        return self._norm([x * db + y * da for x, y in zip(na, nb)], da * db)

    def sub(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._norm([x - y for x, y in zip(na, nb)], da)
        return self._norm([x * db - y * da for x, y in zip(na, nb)], da * db)

    def neg(self, a):
        nums, den = a
        return (tuple(-x for x in nums), den)

    def mul(self, a, b):
        (na, da), (nb, db) = a, b
        d = self._d
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    conv[i + j] += ai * bj
        # theta^r = 1 folds exponents >= r; theta^(r-1) = -(1 + ... + theta^(r-2))
        for m in range(self.r, 2 * d - 1):
            conv[m - self.r] += conv[m]
        high = conv[d]
        nums = [conv[i] - high for i in range(d)]
        return self._norm(nums, da * db)

    def _conjugate(self, a, j):
        # the field automorphism theta -> theta^j
        nums, den = a
        acc = [0] * self.r
        for i, c in enumerate(nums):
            if c:
                acc[(i * j) % self.r] += c
        high = acc[self.r - 1]
        return (tuple(acc[i] - high for i in range(self._d)), den)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        # product of the nontrivial conjugates; a * prod is the rational norm
        prod = self.one
        for j in range(2, self.r):
            prod = self.mul(prod, self._conjugate(a, j))
        norm = self.mul(a, prod)
        nnums, nden = norm
        if any(nnums[1:]):
            raise AssertionError("norm is not rational")
        pn, pd = prod
        return self._norm([x * nden for x in pn], pd * nnums[0])

    def from_int(self, n):
        return ((n,) + (0,) * (self._d - 1), 1)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        return self._norm([fr.numerator] + [0] * (self._d - 1), fr.denominator)

    def _compute_theta(self):
        return ((0, 1) + (0,) * (self._d - 2), 1) if self._d > 1 else ((-1,), 1)

    def serialize_elem(self, a):
        nums, den = a
        return [f"{Fraction(x, den).numerator}/{Fraction(x, den).denominator}" for x in nums]

    def parse_elem(self, s):
        fracs = [Fraction(part) for part in s]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        if len(nums) != self._d:
            raise ValueError(f"expected {self._d} coefficients")
        return self._norm(nums, den)

    def spec_json(self):
        return {"kind": "cyclotomic", "r": self.r}

    def describe(self):
        return f"Q(theta_{self.r})"


class PrimeFieldContext(FieldContext):
    """GF(p) with r | p - 1; elements are residues in [0, p)."""

    kind = "prime"

    def __init__(self, r, p):
        if not is_prime(r) or r == 2:
            raise InvalidFieldSpec(f"r = {r} must be an odd prime")
        if not is_prime(p):
            raise InvalidFieldSpec(f"p = {p} is not prime")
        if (p - 1) % r != 0:
            raise InvalidFieldSpec(f"r = {r} does not divide p - 1 = {p - 1}")
        self.r = r
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1
        self.spec = FieldSpec("prime", r, p=p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n):
        return n % self.p

    def _compute_theta(self):
        g = smallest_primitive_root(self.p)
        return pow(g, (self.p - 1) // self.r, self.p)

    def serialize_elem(self, a):
        return str(a)

    def parse_elem(self, s):
        return int(s) % self.p

    def spec_json(self):
        return {"kind": "prime", "r": self.r, "p": self.p}

    def describe(self):
        return f"GF({self.p})"


class ExtensionFieldContext(FieldContext):
    """GF(p^k) defined by a monic irreducible modulus; elements are
    coefficient tuples of length k, constant term first."""

    kind = "extension"

    def __init__(self, r, p, k, modulus=None):
        if not is_prime(r) or r == 2:
            raise InvalidFieldSpec(f"r = {r} must be an odd prime")
        if not is_prime(p):
            raise InvalidFieldSpec(f"p = {p} is not prime")
        if p == r:
            raise InvalidFieldSpec("characteristic p must differ from r")
        q = p ** k
        if (q - 1) % r != 0:
            raise InvalidFieldSpec(f"r = {r} does not divide p^k - 1 = {q - 1}")
        if modulus is None:
            modulus = find_irreducible_polynomial(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InvalidFieldSpec("modulus must be monic of degree k")
        if not is_irreducible(modulus, p):
            raise InvalidFieldSpec("modulus polynomial is reducible")
        self.r = r
        self.p = p
        self.k = k
        self.q = q
        self.char = p
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.spec = FieldSpec("extension", r, p=p, k=k, modulus=modulus)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        mod = self.modulus
        for m in range(2 * k - 2, k - 1, -1):
            c = conv[m] % p
            if c:
                for i in range(k):
                    conv[m - k + i] -= c * mod[i]
            conv[m] = 0
        return tuple(x % p for x in conv[:k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def _encode(self, n):
        digits = []
        for _ in range(self.k):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)

    def _compute_theta(self):
        facs = prime_factors(self.q - 1)
        for n in range(2, self.q):
            g = self._encode(n)
            if all(self.pow(g, (self.q - 1) // f) != self.one for f in facs):
                return self.pow(g, (self.q - 1) // self.r)
        raise AssertionError("no generator found")

    def serialize_elem(self, a):
        return [str(c) for c in a]

    def parse_elem(self, s):
        coeffs = [int(c) % self.p for c in s]
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients")
        return tuple(coeffs)

    def spec_json(self):
        return {"kind": "extension", "r": self.r, "p": self.p, "k": self.k,
                "modulus": list(self.modulus)}

    def describe(self):
        return f"GF({self.p}^{self.k})"


# ---------------------------------------------------------------------------
# construction


def multiplicative_order(a, n):
    order = 1
    t = a % n
    while t != 1:
        t = t * a % n
        order += 1
        if order > n:
            raise ValueError("element is not a unit")
    return order


def make_field(spec):
    """Build a FieldContext from a FieldSpec, resolving auto variants
    deterministically (smallest valid p, respectively k = ord_2(r))."""
    r = spec.r
    if not is_prime(r) or r == 2:
        raise InvalidFieldSpec(f"r = {r} must be an odd prime")
    if spec.kind == "cyclotomic":
        return CyclotomicContext(r)
    if spec.kind == "prime":
        return PrimeFieldContext(r, spec.p)
    if spec.kind == "extension":
        return ExtensionFieldContext(r, spec.p, spec.k, spec.modulus)
    if spec.kind == "auto-prime":
        p = r + 1
        while not is_prime(p):
            p += r
        return PrimeFieldContext(r, p)
    if spec.kind == "auto-char2":
        k = multiplicative_order(2, r)
        return ExtensionFieldContext(r, 2, k)
    raise InvalidFieldSpec(f"unknown field kind {spec.kind!r}")


def parse_field_spec(text, r):
    """CLI field grammar: cyclotomic | auto-prime | gf:p | gf:p^k | gf2-auto."""
    if text == "cyclotomic":
        return FieldSpec("cyclotomic", r)
    if text == "auto-prime":
        return FieldSpec("auto-prime", r)
    if text == "gf2-auto":
        return FieldSpec("auto-char2", r)
    if text.startswith("gf:"):
        body = text[3:]
        if "^" in body:
            p_str, k_str = body.split("^", 1)
            p, k = int(p_str), int(k_str)
            if k == 1:
                return FieldSpec("prime", r, p=p)
            return FieldSpec("extension", r, p=p, k=k)
        q = int(body)
        if is_prime(q):
            return FieldSpec("prime", r, p=q)
        # prime power: factor q = p^k
        for p in range(2, q):
            if q % p == 0:
                k = 0
                m = q
                while m % p == 0:
                    m //= p
                    k += 1
                if m != 1:
                    raise InvalidFieldSpec(f"{q} is not a prime power")
                return FieldSpec("extension", r, p=p, k=k)
        raise InvalidFieldSpec(f"{q} is not a prime power")
    raise InvalidFieldSpec(f"unrecognised field spec {text!r}")
