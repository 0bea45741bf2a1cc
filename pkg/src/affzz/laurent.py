"""Exact Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` lives over a :class:`VarSet`, an ordered tuple of
variable names.  Terms are stored sparsely as a mapping from exponent vectors
(which may contain negative entries) to nonzero Python integers, so there is no
overflow.  Values are immutable and hashable.

Text format: ``1 + q1*q2^-1``.  Terms are printed in lexicographic order of
their exponent vectors, coefficients ``1`` and exponents ``^1`` are elided.
The parser accepts any term order and arbitrary whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in {self.names}") from None


Q3 = VarSet(("q1", "q2", "q3"))
TS = VarSet(("t", "s"))
TQ = VarSet(("t", "q"))

Exponent = tuple[int, ...]


class LaurentPoly:
    """Immutable sparse Laurent polynomial over ``varset``."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[Exponent, int] | None = None):
        self.varset = varset
        clean: dict[Exponent, int] = {}
        width = len(varset)
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} has wrong length for {varset.names}")
            if c:
                clean[exp] = int(c)
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, varset: VarSet) -> "LaurentPoly":
        return cls(varset)

    @classmethod
    def const(cls, varset: VarSet, c: int) -> "LaurentPoly":
        return cls(varset, {(0,) * len(varset): c})

    @classmethod
    def monomial(cls, varset: VarSet, exps: Mapping[str, int] | Exponent, c: int = 1) -> "LaurentPoly":
        if isinstance(exps, Mapping):
            vec = [0] * len(varset)
            for name, e in exps.items():
                vec[varset.index(name)] += e
            exps = tuple(vec)
        return cls(varset, {tuple(exps): c})

    @classmethod
    def var(cls, varset: VarSet, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(varset, {name: power})

    # -- access -------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items())

    def coeff(self, exp: Exponent) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "LaurentPoly") -> None:
        if self.varset != other.varset:
            raise ValueError(f"variable sets differ: {self.varset.names} vs {other.varset.names}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.varset, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(self.varset, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.varset, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.varset, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials can be raised to negative powers")
            (exp, c), = self._terms.items()
            return LaurentPoly(self.varset, {tuple(e * k for e in exp): c ** (-k)})
        result = LaurentPoly.const(self.varset, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.varset, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    # -- substitution -------------------------------------------------
    def specialize(self, subst: Mapping[str, "LaurentPoly"], target: VarSet) -> "LaurentPoly":
        """Send each variable to a signed monomial of ``target``.

        ``subst`` maps every variable name of ``self`` to a LaurentPoly over
        ``target`` that is a single monomial with coefficient +1 or -1.
        """
        images = []
        for name in self.varset.names:
            if name not in subst:
                raise KeyError(f"no substitution given for {name!r}")
            img = subst[name]
            if img.varset != target:
                raise ValueError(f"image of {name!r} is not over {target.names}")
            if not img.is_monomial() or abs(next(iter(img._terms.values()))) != 1:
                raise ValueError(f"image of {name!r} must be a unit monomial, got {img}")
            (exp, sign), = img._terms.items()
            images.append((exp, sign))
        out: dict[Exponent, int] = {}
        width = len(target)
        for exp, c in self._terms.items():
            new = [0] * width
            sign = 1
            for (img_exp, img_sign), e in zip(images, exp):
                if e:
                    for j in range(width):
                        new[j] += img_exp[j] * e
                    if img_sign < 0 and e % 2:
                        sign = -sign
            key = tuple(new)
            out[key] = out.get(key, 0) + sign * c
        return LaurentPoly(target, out)

    def at_one(self) -> int:
        """Value at all variables equal to 1."""
        return sum(self._terms.values())

    # -- text ---------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in sorted(self._terms.items()):
            factors = []
            for name, e in zip(self.varset.names, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r} over {self.varset.names})"

    @classmethod
    def parse(cls, text: str, varset: VarSet) -> "LaurentPoly":
        return parse(text, varset)


_TERM_SPLIT = re.compile(r"([+-])")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^\(?(-?\d+)\)?)?$")


def parse(text: str, varset: VarSet) -> LaurentPoly:
    """Parse the canonical text format (terms in any order)."""
    src = text.replace(" ", "").replace("\t", "").replace("\n", "")
    if not src:
        raise ValueError("empty polynomial text")
    # Protect the minus sign in exponents like q1^-2 from the term splitter.
    src = src.replace("^-", "^~")
    tokens = _TERM_SPLIT.split(src)
    result = LaurentPoly.zero(varset)
    sign = 1
    for tok in tokens:
        if tok == "+":
            continue
        if tok == "-":
            sign = -sign
            continue
        if tok == "":
            continue
        result = result + _parse_term(tok.replace("^~", "^-"), varset) * sign
        sign = 1
    return result


def _parse_term(term: str, varset: VarSet) -> LaurentPoly:
    coeff = 1
    exps = [0] * len(varset)
    for factor in term.split("*"):
        if not factor:
            raise ValueError(f"malformed term {term!r}")
        if factor.isdigit():
            coeff *= int(factor)
            continue
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"malformed factor {factor!r}")
        name, power = m.group(1), m.group(2)
        exps[varset.index(name)] += int(power) if power is not None else 1
    return LaurentPoly(varset, {tuple(exps): coeff})


def poly_sum(polys: Iterable[LaurentPoly], varset: VarSet) -> LaurentPoly:
    out: dict[Exponent, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(varset, out)
