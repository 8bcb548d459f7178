"""Sparse multivariable Laurent polynomials over complex coefficients.

Polynomials are stored as mappings from exponent tuples (one signed integer
per variable) to complex coefficients.  All values are immutable after
construction and every operation returns a new polynomial, so instances can
be shared freely between threads.

Coefficients live in double precision.  Equality and zero tests are
tolerance-mediated: comparisons are relative to the maximum coefficient
modulus of the operands, floored at 1 so that unit-scale coefficient sets
(the typical case for entries of unitary products) get an absolute cutoff.
"""

from __future__ import annotations

import cmath
from typing import Iterator, Mapping

#: Default relative tolerance for zero tests and coefficient comparisons.
EPS = 1e-9

#: Relative cutoff below which stored coefficients are dropped at
#: construction.  Deliberately at the rounding floor, far below EPS: the
#: cutoff only exists to keep exact cancellations from leaving machine junk
#: in the sparse form.  Every dropped coefficient injects its magnitude as
#: noise, and downstream phase extraction divides that noise by the top
#: coefficient-slice magnitude, so dropping anywhere near EPS would compound
#: past the comparison tolerance over a chain of reductions.
DROP_EPS = 1e-15

Exponents = tuple[int, ...]


class LaurentPoly:
    """A Laurent polynomial in a fixed number of variables.

    The zero polynomial is the empty mapping.  Construction normalizes the
    term mapping: coefficients whose modulus is at most ``DROP_EPS`` times
    the reference scale are dropped.  The reference scale defaults to the
    input's own maximum modulus (floored at 1); operations pass the scale of
    their operands instead, which keeps dropping behaviour stable under
    unimodular rescaling.
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: int,
        terms: Mapping[Exponents, complex] | None = None,
        *,
        drop_scale: float | None = None,
    ):
        if variables < 1:
            raise ValueError(f"need at least one variable, got {variables}")
        self.variables = variables
        cleaned: dict[Exponents, complex] = {}
        if terms:
            if drop_scale is None:
                drop_scale = max(1.0, max(abs(c) for c in terms.values()))
            cutoff = DROP_EPS * drop_scale
            for exps, coeff in terms.items():
                key = tuple(exps)
                if len(key) != variables:
                    raise ValueError(
                        f"exponent vector {key} has length {len(key)}, expected {variables}"
                    )
                value = complex(coeff)
                if not cmath.isfinite(value):
                    raise ValueError(f"non-finite coefficient {value!r} at {key}")
                if abs(value) > cutoff:
                    cleaned[key] = value
        self.terms = cleaned

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: int) -> LaurentPoly:
        return cls(variables)

    @classmethod
    def constant(cls, variables: int, value: complex) -> LaurentPoly:
        return cls(variables, {(0,) * variables: value})

    @classmethod
    def monomial(cls, variables: int, exponents: Exponents, coeff: complex = 1.0) -> LaurentPoly:
        return cls(variables, {tuple(exponents): coeff})

    # -- queries ----------------------------------------------------------

    def max_modulus(self) -> float:
        """Largest coefficient modulus; 0 for the zero polynomial."""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = EPS) -> bool:
        mod = self.max_modulus()
        return mod <= tol * max(1.0, mod)

    def constant_coeff(self) -> complex:
        return self.terms.get((0,) * self.variables, 0j)

    def degree(self, j: int) -> int:
        """Largest |exponent| of variable ``j`` (1-based); 0 for the zero polynomial."""
        i = self._index(j)
        return max((abs(k[i]) for k in self.terms), default=0)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(j) for j in range(1, self.variables + 1))

    def coeff_slice(self, j: int, exponent: int) -> LaurentPoly:
        """Sub-polynomial of the terms whose exponent of variable ``j`` equals ``exponent``.

        The result keeps the ambient arity with the j-th exponent zeroed, so
        every polynomial in one computation shares the same variable count.
        """
        i = self._index(j)
        picked = {
            k[:i] + (0,) + k[i + 1 :]: c for k, c in self.terms.items() if k[i] == exponent
        }
        return LaurentPoly(self.variables, picked, drop_scale=max(1.0, self.max_modulus()))

    # -- involutions and substitutions --------------------------------------

    def star(self) -> LaurentPoly:
        """Conjugate every coefficient; the support is unchanged."""
        return self._same_support(lambda k, c: c.conjugate())

    def invert_vars(self) -> LaurentPoly:
        """Substitute a_j -> a_j^{-1} for every variable (negate all exponents)."""
        flipped = {tuple(-e for e in k): c for k, c in self.terms.items()}
        return LaurentPoly(self.variables, flipped, drop_scale=max(1.0, self.max_modulus()))

    def negate_var(self, j: int) -> LaurentPoly:
        """Substitute a_j -> -a_j: flip the sign of terms with odd j-exponent."""
        i = self._index(j)
        return self._same_support(lambda k, c: -c if k[i] % 2 else c)

    def torus_conjugate(self) -> LaurentPoly:
        """star(invert_vars(self)): equals pointwise complex conjugation of the
        polynomial's values whenever every variable lies on the unit circle."""
        return self.invert_vars().star()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_shape(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0j) + c
        return LaurentPoly(self.variables, merged, drop_scale=self._pair_scale(other))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_shape(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0j) - c
        return LaurentPoly(self.variables, merged, drop_scale=self._pair_scale(other))

    def __neg__(self) -> LaurentPoly:
        return self._same_support(lambda k, c: -c)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._require_same_shape(other)
            out: dict[Exponents, complex] = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = tuple(a + b for a, b in zip(k1, k2))
                    out[k] = out.get(k, 0j) + c1 * c2
            return LaurentPoly(self.variables, out, drop_scale=self._pair_scale(other))
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            scaled = {k: v * c for k, v in self.terms.items()}
            return LaurentPoly(
                self.variables, scaled, drop_scale=max(1.0, self.max_modulus() * abs(c))
            )
        return NotImplemented

    __rmul__ = __mul__

    # -- comparisons ----------------------------------------------------------

    def max_deviation(self, other: LaurentPoly) -> float:
        """Largest coefficient-wise |difference| against ``other``."""
        self._require_same_shape(other)
        keys = self.terms.keys() | other.terms.keys()
        return max(
            (abs(self.terms.get(k, 0j) - other.terms.get(k, 0j)) for k in keys), default=0.0
        )

    def approx_eq(self, other: LaurentPoly, tol: float = EPS) -> bool:
        """Coefficient-wise equality within ``tol`` relative to the operand scale."""
        return self.max_deviation(other) <= tol * self._pair_scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __iter__(self) -> Iterator[tuple[Exponents, complex]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in self)
        return f"LaurentPoly({self.variables}, {{{body}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self:
            mono = "*".join(f"a{i + 1}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)

    # -- internals -------------------------------------------------------------

    def _index(self, j: int) -> int:
        if not 1 <= j <= self.variables:
            raise IndexError(f"variable index {j} out of range 1..{self.variables}")
        return j - 1

    def _require_same_shape(self, other: LaurentPoly) -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable-count mismatch: {self.variables} != {other.variables}"
            )

    def _pair_scale(self, other: LaurentPoly) -> float:
        return max(1.0, self.max_modulus(), other.max_modulus())

    def _same_support(self, fn) -> LaurentPoly:
        out = LaurentPoly(self.variables)
        out.terms = {k: fn(k, c) for k, c in self.terms.items()}
        return out
