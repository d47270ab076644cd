"""
Exact scalars: python rationals and the rational-function field QQ(a).

Every other module works with plain scalar values and asks a field object only when it has to
coerce, parse or render them. Vectors and matrices never hold floats.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from sympy import QQ, Symbol, parse_expr
from sympy.polys.fields import FracElement
from sympy.polys.fields import field as fraction_field

ALPHA_SYMBOL = "a"

# a single shared QQ(a); elements from different FracField instances do not mix
_QQ_ALPHA, _ALPHA = fraction_field(ALPHA_SYMBOL, QQ)

Scalar = Any


def _ground_to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_fraction(value: Scalar) -> Fraction | None:
    "Return `value` as a Fraction when it is a constant, otherwise None."
    if isinstance(value, FracElement):
        if not (value.numer.is_ground and value.denom.is_ground):
            return None
        return _ground_to_fraction(value.numer.LC) / _ground_to_fraction(
            value.denom.LC
        )

    return Fraction(value)


def as_integer(value: Scalar) -> int | None:
    constant = to_fraction(value)
    if constant is None or constant.denominator != 1:
        return None
    return constant.numerator


def _render_polynomial(poly) -> str:
    if not poly:
        return "0"

    rendered = []
    for (degree,), coeff in poly.terms():
        coefficient = _ground_to_fraction(coeff)
        if degree == 0:
            term = str(coefficient)
        else:
            monomial = ALPHA_SYMBOL if degree == 1 else f"{ALPHA_SYMBOL}^{degree}"
            if coefficient == 1:
                term = monomial
            elif coefficient == -1:
                term = f"-{monomial}"
            else:
                term = f"{coefficient}*{monomial}"
        rendered.append(term)

    text = rendered[0]
    for term in rendered[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def render_scalar(value: Scalar) -> str:
    if not isinstance(value, FracElement):
        return str(Fraction(value))

    numerator, denominator = value.numer, value.denom
    leading = denominator.LC
    numerator = numerator.quo_ground(leading)
    denominator = denominator.quo_ground(leading)

    if denominator == 1:
        return _render_polynomial(numerator)

    if numerator.is_ground:
        return f"{_render_polynomial(numerator)}/({_render_polynomial(denominator)})"

    return f"({_render_polynomial(numerator)})/({_render_polynomial(denominator)})"


def _coerce_rational(value: Scalar) -> Fraction:
    if isinstance(value, FracElement):
        constant = to_fraction(value)
        if constant is None:
            raise TypeError(f"{render_scalar(value)} is not a rational number")
        return constant
    return Fraction(value)


def _coerce_rational_function(value: Scalar) -> FracElement:
    if isinstance(value, FracElement):
        return value
    value = Fraction(value)
    return _QQ_ALPHA(value.numerator) / _QQ_ALPHA(value.denominator)


def common_coercion(values: Iterable[Scalar]) -> Callable[[Scalar], Scalar]:
    """
    Pick the coercion that brings a batch of scalars into one field.

    Integers and Fractions are promoted to QQ(a) as soon as a single rational function shows up.
    """
    for value in values:
        if isinstance(value, FracElement):
            return _coerce_rational_function
    return _coerce_rational


@dataclass(frozen=True)
class RationalField:
    """QQ, optionally carrying the sample value used for the D(2,1;a) parameter."""

    alpha: Fraction = Fraction(2)
    name: str = field(default="QQ", init=False)
    symbolic: bool = field(default=False, init=False)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Scalar) -> Fraction:
        return _coerce_rational(value)

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def render(self, value: Scalar) -> str:
        return render_scalar(value)

    def inv(self, value: Scalar) -> Fraction:
        value = self.coerce(value)
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return 1 / value


@dataclass(frozen=True)
class RationalFunctionField:
    """QQ(a), rendered and parsed with `a` as the variable."""

    name: str = field(default="QQ(a)", init=False)
    symbolic: bool = field(default=True, init=False)

    @property
    def alpha(self) -> FracElement:
        return _ALPHA

    @property
    def zero(self) -> FracElement:
        return _QQ_ALPHA.zero

    @property
    def one(self) -> FracElement:
        return _QQ_ALPHA.one

    def coerce(self, value: Scalar) -> FracElement:
        return _coerce_rational_function(value)

    def parse(self, text: str) -> FracElement:
        expression = parse_expr(
            text.strip().replace("^", "**"),
            local_dict={ALPHA_SYMBOL: Symbol(ALPHA_SYMBOL)},
        )
        return _QQ_ALPHA.from_expr(expression)

    def render(self, value: Scalar) -> str:
        return render_scalar(self.coerce(value))

    def inv(self, value: Scalar) -> FracElement:
        value = self.coerce(value)
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return 1 / value


ScalarField = RationalField | RationalFunctionField

QQ_FIELD = RationalField()
QQ_ALPHA_FIELD = RationalFunctionField()


def field_from_name(name: str, alpha: str | None = None) -> ScalarField:
    if name == QQ_ALPHA_FIELD.name:
        return QQ_ALPHA_FIELD
    if name == "QQ":
        return RationalField(alpha=Fraction(alpha)) if alpha else QQ_FIELD
    raise ValueError(f"unknown scalar field '{name}'")


def parse_alpha(text: str) -> ScalarField:
    """
    Parse the --alpha flag: `symbolic` or a rational sample outside {0, -1}.
    """
    if text.strip().lower() == "symbolic":
        return QQ_ALPHA_FIELD

    try:
        sample = Fraction(text.strip())
    except ValueError as e:
        raise ValueError(f"alpha must be 'symbolic' or a rational, got '{text}'") from e

    if sample in (0, -1):
        raise ValueError("alpha must avoid 0 and -1")

    return RationalField(alpha=sample)
