"""Exact integer Laurent polynomials in named commuting variables.

Coefficients are Python ints and exponents may be negative.  Values are
immutable: every operation returns a fresh polynomial.  No floating
point is used anywhere.
"""

__all__ = ["LaurentPoly"]


class LaurentPoly:
    """A Laurent polynomial with exact integer coefficients.

    Terms are stored as a map from exponent tuples (one entry per
    variable) to nonzero coefficients; the zero polynomial has no terms.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables=("t",), terms=()):
        variables = tuple(str(v) for v in variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names: %r" % (variables,))
        merged = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, coeff in items:
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(
                    "exponent tuple %r does not match variables %r"
                    % (exps, variables)
                )
            merged[exps] = merged.get(exps, 0) + int(coeff)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_terms", {e: c for e, c in merged.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, variables=("t",)):
        return cls(variables)

    @classmethod
    def constant(cls, value, variables=("t",)):
        zero_exp = (0,) * len(tuple(variables))
        return cls(variables, {zero_exp: value})

    @classmethod
    def monomial(cls, variables, exponents, coeff=1):
        return cls(variables, {tuple(exponents): coeff})

    # -- inspection --------------------------------------------------

    def items(self):
        """Terms as a tuple of (exponent_tuple, coeff), exponents ascending."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        return self._terms.get(tuple(exps), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def at_one(self):
        """Value with every variable set to 1 (the coefficient sum)."""
        return sum(self._terms.values())

    def substitute_one(self, var):
        """Set one variable to 1, returning a polynomial in the rest."""
        if var not in self.variables:
            raise ValueError("unknown variable %r" % (var,))
        k = self.variables.index(var)
        rest = self.variables[:k] + self.variables[k + 1:]
        terms = {}
        for exps, coeff in self._terms.items():
            cut = exps[:k] + exps[k + 1:]
            terms[cut] = terms.get(cut, 0) + coeff
        return LaurentPoly(rest, terms)

    # -- arithmetic --------------------------------------------------

    def _compat(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError("expected LaurentPoly, got %r" % type(other).__name__)
        if other.variables != self.variables:
            raise ValueError(
                "variable mismatch: %r vs %r" % (self.variables, other.variables)
            )

    def __add__(self, other):
        self._compat(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(self.variables, terms)

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(
                self.variables, {e: c * other for e, c in self._terms.items()}
            )
        self._compat(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    # -- comparison --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.variables, self.items())))
        return self._hash

    # -- text form ---------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in self.items():
            factors = []
            for var, e in zip(self.variables, exps):
                if e == 0:
                    continue
                factors.append(var if e == 1 else "%s^%d" % (var, e))
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            chunks.append(("-" if coeff < 0 else "+", body))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "LaurentPoly(%r, %r)" % (self.variables, dict(self.items()))
