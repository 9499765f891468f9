"""Text grammar for scalars, elements, and spec strings, plus canonical
rendering back to text.

Element grammar (whitespace between tokens is ignored)::

    element  := '0' | ['-'] term (('+' | '-') term)*
    term     := [scalar '*'] monomial
    monomial := 'a^' NAT 'c^' NAT        quantum-plane monomial
              | 'x_' INT                 divided-power / bounded-degree vector
              | 'E_' NAT '_' NAT         matrix unit
    scalar   := '(' signed (('+' | '-') part)* ')' | signed
    signed   := ['-'] part
    part     := 'i' | rational ['i']
    rational := NAT ['/' POSNAT]

A bare ``i`` is the imaginary unit, never a monomial.  Pure-scalar terms
are rejected: every term names a monomial (the zero element is written
``0``).  Canonical rendering sorts terms in basis order, elides the
coefficient 1, and folds signs of pure real or pure imaginary
coefficients into the separators.

Spec strings name coalgebras (``manin?q=2/3``, ``divpow``, ``negdeg?M=3``,
``matrix?n=4``), forms (``manin-orth?w=one``, ``manin-skew?mu=one``,
``diag?w=factorial``, ``matrix-orth``, ``matrix-weighted?w=geom:2``), and
weight families (``one``, ``factorial``, ``absfactorial``,
``geom:<rational>``, ``poly:<int>``).
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    Coalgebra,
    DividedKey,
    Element,
    ManinKey,
    MatrixKey,
    NegDegKey,
    TensorElement,
    TripleTensorElement,
)
from .errors import InvalidParameter, ParseError, UnknownSpec, WrongCoalgebra
from .instances import (
    DividedPower,
    FormSpec,
    ManinPlane,
    MatrixCoalgebra,
    NegativeDegree,
    WeightFamily,
)
from .scalars import I, ONE, GaussianRational

COALGEBRA_NAMES = ("manin", "divpow", "negdeg", "matrix")
FORM_NAMES = ("manin-orth", "manin-skew", "diag", "matrix-orth", "matrix-weighted")
WEIGHT_NAMES = ("one", "factorial", "absfactorial", "geom", "poly")


# ---------------------------------------------------------------------------
# scanner
# ---------------------------------------------------------------------------

class _Scanner:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int | None = None):
        raise ParseError(message, self.pos if position is None else position)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def match(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str, what: str | None = None):
        if not self.match(ch):
            self.error(what or f"expected '{ch}'")

    def read_nat(self, what: str = "number") -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}", start)
        return int(self.text[start:self.pos])

    def read_int(self, what: str = "integer") -> int:
        neg = self.match("-")
        value = self.read_nat(what)
        return -value if neg else value


# ---------------------------------------------------------------------------
# scalar literals
# ---------------------------------------------------------------------------

def _scalar_part(s: _Scanner) -> GaussianRational:
    s.skip_ws()
    if s.match("i"):
        return I
    numerator = s.read_nat("number or 'i'")
    value = Fraction(numerator)
    if s.match("/"):
        den_start = s.pos
        denominator = s.read_nat("denominator")
        if denominator == 0:
            s.error("denominator must be positive", den_start)
        value = Fraction(numerator, denominator)
    if s.match("i"):
        return GaussianRational(0, value)
    return GaussianRational(value)


def _signed_scalar_part(s: _Scanner) -> GaussianRational:
    s.skip_ws()
    neg = s.match("-")
    value = _scalar_part(s)
    return -value if neg else value


def _scalar_literal(s: _Scanner, allow_compound: bool) -> GaussianRational:
    s.skip_ws()
    if s.match("("):
        total = _signed_scalar_part(s)
        while True:
            s.skip_ws()
            if s.match("+"):
                total = total + _scalar_part(s)
            elif s.match("-"):
                total = total - _scalar_part(s)
            else:
                break
        s.expect(")", "expected ')' to close scalar")
        return total
    total = _signed_scalar_part(s)
    if allow_compound:
        while True:
            s.skip_ws()
            if s.match("+"):
                total = total + _scalar_part(s)
            elif s.match("-"):
                total = total - _scalar_part(s)
            else:
                break
    return total


def parse_scalar(text: str) -> GaussianRational:
    """Parse a standalone scalar literal such as ``3``, ``-2i``, ``3/2``,
    ``(1/2+3i)``, or ``(3-i)``."""
    s = _Scanner(text)
    value = _scalar_literal(s, allow_compound=True)
    s.skip_ws()
    if not s.at_end():
        s.error("unexpected trailing input")
    return value


def render_scalar(value: GaussianRational) -> str:
    """Canonical scalar text; inverse of :func:`parse_scalar`."""
    return str(value)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

def _parse_monomial(s: _Scanner, coalgebra: Coalgebra):
    s.skip_ws()
    start = s.pos
    ch = s.peek()
    if ch == "a":
        s.advance()
        s.expect("^", "expected '^' after 'a'")
        i = s.read_nat("exponent")
        s.skip_ws()
        s.expect("c", "expected 'c^...' to complete the monomial")
        s.expect("^", "expected '^' after 'c'")
        j = s.read_nat("exponent")
        if not isinstance(coalgebra, ManinPlane):
            raise WrongCoalgebra(
                f"'a^{i} c^{j}' is a quantum-plane monomial but the "
                f"coalgebra is {coalgebra.spec}"
            )
        key = ManinKey(i, j)
    elif ch == "x":
        s.advance()
        s.expect("_", "expected '_' after 'x'")
        n = s.read_int("index")
        if isinstance(coalgebra, DividedPower):
            key = DividedKey(n)
        elif isinstance(coalgebra, NegativeDegree):
            key = NegDegKey(n)
        else:
            raise WrongCoalgebra(
                f"'x_{n}' does not belong to the coalgebra {coalgebra.spec}"
            )
    elif ch == "E":
        s.advance()
        s.expect("_", "expected '_' after 'E'")
        i = s.read_nat("row index")
        s.expect("_", "expected '_' between matrix indices")
        j = s.read_nat("column index")
        if not isinstance(coalgebra, MatrixCoalgebra):
            raise WrongCoalgebra(
                f"'E_{i}_{j}' is a matrix unit but the coalgebra is {coalgebra.spec}"
            )
        key = MatrixKey(i, j)
    else:
        s.error("expected a monomial (a^I c^J, x_N, or E_I_J)", start)
    coalgebra.validate_key(key)
    return key


def _parse_term(s: _Scanner, coalgebra: Coalgebra):
    s.skip_ws()
    if s.peek() in "0123456789(i":
        coeff = _scalar_literal(s, allow_compound=False)
        s.skip_ws()
        s.expect("*", "expected '*' between coefficient and monomial")
    else:
        coeff = ONE
    key = _parse_monomial(s, coalgebra)
    return key, coeff


def parse_element(text: str, coalgebra: Coalgebra) -> Element:
    """Parse a linear combination of monomials in the coalgebra's basis."""
    if text.strip() == "0":
        return Element.zero(coalgebra)
    s = _Scanner(text)
    s.skip_ws()
    if s.at_end():
        s.error("empty element", 0)
    pairs = []
    negate = s.match("-")
    key, coeff = _parse_term(s, coalgebra)
    pairs.append((key, -coeff if negate else coeff))
    while True:
        s.skip_ws()
        if s.at_end():
            break
        if s.match("+"):
            key, coeff = _parse_term(s, coalgebra)
            pairs.append((key, coeff))
        elif s.match("-"):
            key, coeff = _parse_term(s, coalgebra)
            pairs.append((key, -coeff))
        else:
            s.error("expected '+' or '-' between terms")
    return Element(coalgebra, pairs)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _fold_sign(coeff: GaussianRational):
    # Pure real / pure imaginary coefficients fold their sign into the
    # term separator; mixed ones render parenthesized, unfolded.
    if not coeff.im:
        return (-1, -coeff) if coeff.re < 0 else (1, coeff)
    if not coeff.re:
        return (-1, -coeff) if coeff.im < 0 else (1, coeff)
    return (1, coeff)


def _render_terms(items, body_of) -> str:
    if not items:
        return "0"
    chunks = []
    for position, (key, coeff) in enumerate(items):
        sign, magnitude = _fold_sign(coeff)
        body = body_of(key)
        if magnitude != ONE:
            body = f"{magnitude}*{body}"
        if position == 0:
            chunks.append(("-" if sign < 0 else "") + body)
        else:
            chunks.append((" - " if sign < 0 else " + ") + body)
    return "".join(chunks)


def render_element(element: Element) -> str:
    """Canonical text: terms in basis order, ``1*`` elided, zero as ``0``."""
    return _render_terms(element.sorted_terms(), lambda key: key.text())


def _tensor_separator(coalgebra: Coalgebra) -> str:
    return " ⊗ " if coalgebra.key_text_has_spaces else "⊗"


def render_tensor(tensor: TensorElement) -> str:
    sep = _tensor_separator(tensor.coalgebra)
    return _render_terms(
        tensor.sorted_terms(), lambda key: sep.join(part.text() for part in key)
    )


def render_triple(triple: TripleTensorElement) -> str:
    sep = _tensor_separator(triple.coalgebra)
    return _render_terms(
        triple.sorted_terms(), lambda key: sep.join(part.text() for part in key)
    )


# ---------------------------------------------------------------------------
# spec strings
# ---------------------------------------------------------------------------

def _parse_params(params_text: str, spec_text: str) -> dict:
    params: dict = {}
    if not params_text:
        return params
    for chunk in params_text.split("&"):
        name, eq, value = chunk.partition("=")
        if not eq or not name or not value:
            raise InvalidParameter(f"malformed parameter '{chunk}' in '{spec_text}'")
        if name in params:
            raise InvalidParameter(f"duplicate parameter '{name}' in '{spec_text}'")
        params[name] = value
    return params


def _take_param(params: dict, name: str, spec_text: str, default: str | None = None) -> str:
    value = params.pop(name, default)
    if value is None:
        raise InvalidParameter(f"'{spec_text}' requires the parameter {name}=...")
    return value


def _reject_extras(params: dict, spec_text: str):
    if params:
        name = sorted(params)[0]
        raise InvalidParameter(f"unknown parameter '{name}' in '{spec_text}'")


def _parse_int_param(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InvalidParameter(f"{what} must be an integer, got '{value}'") from None


def parse_weight(text: str) -> WeightFamily:
    """Parse a weight family spec such as ``one`` or ``geom:1/2``."""
    t = text.strip()
    name, colon, param = t.partition(":")
    if name not in WEIGHT_NAMES:
        raise UnknownSpec(f"unknown weight family '{t}'")
    if name in ("one", "factorial", "absfactorial"):
        if colon:
            raise InvalidParameter(f"weight '{name}' takes no parameter")
        return WeightFamily(name)
    if not colon or not param:
        raise InvalidParameter(f"weight '{name}' requires a parameter, e.g. '{name}:2'")
    if name == "geom":
        try:
            ratio = Fraction(param)
        except (ValueError, ZeroDivisionError):
            raise InvalidParameter(f"geom ratio must be a rational, got '{param}'") from None
        if ratio <= 0:
            raise InvalidParameter("geom ratio must be positive")
        return WeightFamily("geom", ratio)
    return WeightFamily("poly", _parse_int_param(param, "poly degree"))


def _parse_coalgebra_spec(head: str, params: dict, text: str) -> Coalgebra:
    if head == "manin":
        q_text = _take_param(params, "q", text, default="2/3")
        _reject_extras(params, text)
        try:
            q = parse_scalar(q_text)
        except ParseError as exc:
            raise InvalidParameter(f"invalid q '{q_text}': {exc}") from None
        return ManinPlane(q)
    if head == "divpow":
        _reject_extras(params, text)
        return DividedPower()
    if head == "negdeg":
        M = _parse_int_param(_take_param(params, "M", text), "M")
        _reject_extras(params, text)
        return NegativeDegree(M)
    # matrix
    n = _parse_int_param(_take_param(params, "n", text), "n")
    _reject_extras(params, text)
    return MatrixCoalgebra(n)


def _parse_form_spec(head: str, params: dict, text: str) -> FormSpec:
    if head == "matrix-orth":
        _reject_extras(params, text)
        return FormSpec("matrix-orth")
    label = "mu" if head == "manin-skew" else "w"
    weight = parse_weight(_take_param(params, label, text, default="one"))
    _reject_extras(params, text)
    return FormSpec(head, weight)


def parse_spec(text: str):
    """Parse a coalgebra, form, or weight spec string; the name before
    ``?``/``:`` decides which kind it is."""
    t = text.strip()
    head, qmark, params_text = t.partition("?")
    head = head.strip()
    if head in COALGEBRA_NAMES:
        return _parse_coalgebra_spec(head, _parse_params(params_text, t), t)
    if head in FORM_NAMES:
        return _parse_form_spec(head, _parse_params(params_text, t), t)
    if not qmark:
        weight_name = head.partition(":")[0]
        if weight_name in WEIGHT_NAMES:
            return parse_weight(t)
    raise UnknownSpec(f"unknown spec '{t}'")


def parse_coalgebra(text: str) -> Coalgebra:
    result = parse_spec(text)
    if not isinstance(result, Coalgebra):
        raise InvalidParameter(f"'{text.strip()}' is not a coalgebra spec")
    return result


def parse_form(text: str) -> FormSpec:
    result = parse_spec(text)
    if not isinstance(result, FormSpec):
        raise InvalidParameter(f"'{text.strip()}' is not a form spec")
    return result
