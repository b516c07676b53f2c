from fractions import Fraction
from typing import Dict, Iterable

from sympy import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from PositroidToolkit.errors import InvalidInput, UnknownVariable

# sympy refuses a field with no generators
_PLACEHOLDER = "_u"


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class RationalFunctionField:
    """Field of rational functions over QQ in a fixed list of named variables.

    Elements are sympy ``FracElement``s in graded-lex order. Integers and Fractions mix freely with
    them only after going through :meth:`lift`.

    Attributes
    ----------
    names : tuple of str
        Declared variable names, in the order that fixes the monomial order.
    field : sympy.polys.fields.FracField
        Underlying sympy field.
    gens : dict
        Variable name to generator element.
    """

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise InvalidInput(f"Repeated variable name in {self.names}")
        result = field(",".join(self.names) if self.names else _PLACEHOLDER, QQ, grlex)
        self.field = result[0]
        self.gens = dict(zip(self.names, result[1:]))

    def gen(self, name: str):
        if name not in self.gens:
            raise UnknownVariable(f"Variable {name!r} is not one of {self.names}")
        return self.gens[name]

    def lift(self, value):
        """Maps an int, Fraction or element of this field into the field."""
        if isinstance(value, FracElement):
            return value
        if isinstance(value, PolyElement):
            return self.field(value)
        value = Fraction(value)
        return self.field.ground_new(QQ(value.numerator, value.denominator))

    def zero(self):
        return self.field.zero

    def one(self):
        return self.field.one

    def is_constant(self, x) -> bool:
        if isinstance(x, (int, Fraction)):
            return True
        return x.numer.is_ground and x.denom.is_ground

    def to_fraction(self, x) -> Fraction:
        """Converts a constant element to a Fraction."""
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if not self.is_constant(x):
            raise InvalidInput(f"{self.format(x)} is not a constant")
        return _to_fraction(x.numer.LC) / _to_fraction(x.denom.LC)

    def _evaluate_poly(self, p: PolyElement, values: Dict[str, Fraction]) -> Fraction:
        point = []
        for name in self.names:
            if name not in values:
                raise UnknownVariable(f"No value given for {name!r}")
            point.append(Fraction(values[name]))
        total = Fraction(0)
        for monom, coeff in p.terms():
            term = _to_fraction(coeff)
            for v, e in zip(point, monom):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate(self, x, values: Dict[str, Fraction]) -> Fraction:
        """Evaluates an element at a rational point given as a name -> value mapping.

        Raises ZeroDivisionError when the denominator vanishes at the point.
        """
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        unknown = set(values) - set(self.names)
        if unknown:
            raise UnknownVariable(f"Unknown variables {sorted(unknown)}")
        if isinstance(x, PolyElement):
            return self._evaluate_poly(x, values)
        return self._evaluate_poly(x.numer, values) / self._evaluate_poly(x.denom, values)

    def substitute(self, x, values: Dict[str, Fraction]):
        """Partial substitution of rational values, returning an element of this field."""
        if isinstance(x, (int, Fraction)):
            return self.lift(x)
        for name, value in values.items():
            self.gen(name)
        expr = x.as_expr()
        subs = {self.field.symbols[self.names.index(n)]: QQ(Fraction(v).numerator, Fraction(v).denominator)
                for n, v in values.items()}
        return self.field.from_expr(expr.subs(subs)) if subs else x

    def partial(self, x, name: str):
        """Formal partial derivative with respect to a declared variable."""
        g = self.gen(name)
        if isinstance(x, (int, Fraction)):
            return self.field.zero
        return x.diff(g)

    def poly_partial(self, p, name: str):
        """Partial derivative of a polynomial element (a field element with denominator 1)."""
        if isinstance(p, FracElement) and not p.denom.is_ground:
            raise InvalidInput(f"{self.format(p)} is not a polynomial")
        return self.partial(p, name)

    def _format_poly(self, p: PolyElement) -> str:
        if not p:
            return "0"
        pieces = []
        for monom, coeff in p.terms():
            c = _to_fraction(coeff)
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, monom) if e]
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def format(self, x) -> str:
        """Serializes as sums of "coeff*var^e" terms in graded-lex order."""
        if isinstance(x, (int, Fraction)):
            return str(Fraction(x))
        if isinstance(x, PolyElement):
            return self._format_poly(x)
        numer, denom = x.numer, x.denom
        lc = _to_fraction(denom.LC)
        if denom.is_ground:
            return self._format_poly(numer.quo_ground(denom.LC)) if lc != 1 else self._format_poly(numer)
        return f"({self._format_poly(numer)})/({self._format_poly(denom)})"

    def equal(self, x, y) -> bool:
        """Equality by cross-multiplication."""
        x, y = self.lift(x), self.lift(y)
        return not (x.numer * y.denom - y.numer * x.denom)
