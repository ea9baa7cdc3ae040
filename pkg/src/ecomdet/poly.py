"""Exact sparse multivariate polynomials with integer coefficients.

A polynomial lives in a fixed universe of ``nvars`` variables (one per
semigroup element).  Monomials are packed into a single Python int with a
16-bit field per variable, variable 0 in the most significant field, so
that integer comparison of two keys is lexicographic comparison of the
exponent vectors.  Coefficients are unbounded Python ints.

    >>> x = Poly.variables(2)
    >>> ((x[0] - x[1]) * (x[0] + x[1])).format("ab")
    'x_a^2 - x_b^2'
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

FIELD = 16
_MASK = (1 << FIELD) - 1
_MAXEXP = (1 << (FIELD - 1)) - 1


def _guard(nvars: int) -> int:
    g = 0
    for _ in range(nvars):
        g = (g << FIELD) | (1 << (FIELD - 1))
    return g


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomial -> int."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[int, int] | None = None):
        self.nvars = nvars
        if terms:
            self.terms = {k: c for k, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: int) -> "Poly":
        return cls._raw(nvars, {0: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int, coeff: int = 1) -> "Poly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} outside 0..{nvars - 1}")
        return cls._raw(nvars, {1 << (FIELD * (nvars - 1 - i)): coeff} if coeff else {})

    @classmethod
    def variables(cls, nvars: int) -> list["Poly"]:
        return [cls.var(nvars, i) for i in range(nvars)]

    @classmethod
    def from_exponents(cls, nvars: int, terms: Mapping[Sequence[int], int]) -> "Poly":
        out: dict[int, int] = {}
        for exps, c in terms.items():
            k = pack(exps, nvars)
            out[k] = out.get(k, 0) + c
        return cls(nvars, out)

    @classmethod
    def linear(cls, nvars: int, coeffs: Mapping[int, int]) -> "Poly":
        """Linear form sum(c_i * x_i)."""
        return cls(nvars, {1 << (FIELD * (nvars - 1 - i)): c for i, c in coeffs.items()})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def exponents(self, key: int) -> tuple[int, ...]:
        return unpack(key, self.nvars)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """(exponent vector, coefficient) pairs in display order."""
        return [(self.exponents(k), self.terms[k]) for k in self._display_keys()]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(k % _MASK for k in self.terms)

    def is_homogeneous(self) -> bool:
        return len({k % _MASK for k in self.terms}) <= 1

    def variables_used(self) -> set[int]:
        used = set()
        for k in self.terms:
            used.update(i for i, e in enumerate(self.exponents(k)) if e)
        return used

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable universes differ: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly._raw(self.nvars, out)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return Poly.zero(self.nvars)
        if self.degree() + other.degree() > _MAXEXP:
            raise OverflowError("degree exceeds packed exponent range")
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return Poly._raw(self.nvars, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient self / other; raises ArithmeticError if inexact."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        guard = _guard(self.nvars)
        lk = max(other.terms)
        lc = other.terms[lk]
        rem = dict(self.terms)
        quot: dict[int, int] = {}
        while rem:
            k = max(rem)
            c = rem[k]
            if ((k | guard) - lk) & guard != guard:
                raise ArithmeticError("inexact polynomial division (monomial)")
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("inexact polynomial division (coefficient)")
            qk = k - lk
            quot[qk] = q
            for k2, c2 in other.terms.items():
                kk = qk + k2
                v = rem.get(kk, 0) - q * c2
                if v:
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return Poly._raw(self.nvars, quot)

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, values: Sequence[int], mod: int | None = None) -> int:
        """Value at an integer point, optionally reduced modulo ``mod``."""
        total = 0
        for k, c in self.terms.items():
            term = c
            for i, e in enumerate(unpack(k, self.nvars)):
                if e:
                    term *= pow(values[i], e, mod) if mod else values[i] ** e
                    if mod:
                        term %= mod
            total += term
        return total % mod if mod else total

    def eval_mod_p(self, values: Sequence[int], p: int) -> int:
        return self.evaluate(values, mod=p)

    def substitute(self, subs: Mapping[int, "Poly"]) -> "Poly":
        """Replace variable i by the polynomial subs[i] (others unchanged)."""
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                powers[key] = subs[i] if e == 1 else power(i, e - 1) * subs[i]
            return powers[key]

        out = Poly.zero(self.nvars)
        for k, c in self.terms.items():
            exps = unpack(k, self.nvars)
            keep = [0] * self.nvars
            term = Poly.const(self.nvars, c)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in subs:
                    term = term * power(i, e)
                else:
                    keep[i] = e
            if any(keep):
                term = term * Poly._raw(self.nvars, {pack(keep, self.nvars): 1})
            out = out + term
        return out

    # -- display ----------------------------------------------------------

    def _display_keys(self) -> list[int]:
        return sorted(self.terms, key=lambda k: (k % _MASK, k), reverse=True)

    def format(self, labels: Sequence[str] | None = None) -> str:
        """Terms by descending total degree, then descending lex exponent order."""
        if not self.terms:
            return "0"
        if labels is None:
            labels = [f"e{i}" for i in range(self.nvars)]
        parts = []
        for k in self._display_keys():
            c = self.terms[k]
            factors = []
            for i, e in enumerate(unpack(k, self.nvars)):
                if e == 1:
                    factors.append(f"x_{labels[i]}")
                elif e:
                    factors.append(f"x_{labels[i]}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.format()})"


def pack(exps: Sequence[int], nvars: int) -> int:
    if len(exps) != nvars:
        raise ValueError(f"exponent vector length {len(exps)} != {nvars}")
    k = 0
    for e in exps:
        if not 0 <= e <= _MAXEXP:
            raise OverflowError(f"exponent {e} out of range")
        k = (k << FIELD) | e
    return k


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & _MASK
        key >>= FIELD
    return tuple(out)


def product(polys: Iterable[Poly], nvars: int) -> Poly:
    result = Poly.const(nvars, 1)
    for p in polys:
        result = result * p
    return result
