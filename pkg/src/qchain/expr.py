"""Tiny expression language for building chain states.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor+                       juxtaposition = composition,
                                            applied right to left
    factor := 'vac' | 'a[' INT ']' | 'b[' INT ']'
            | NUMBER | NUMBER 'i' | 'i' | '(' expr ')'

``vac`` is the ground state, ``a[k]`` raises the occupation of wave-number
mode k, ``b[n]`` creates an excitation localized at the 1-based site n, and
scalars (real or imaginary literals) scale whatever follows.  Parenthesized
sums of operators distribute over application, so ``(a[1] + i a[-1]) vac``
is the superposition with coefficients 1 and i.  Every product must
ultimately apply its operators to ``vac``.

Parsing reports syntax errors, out-of-range indices, and type errors (for
instance adding a scalar to a state) with a character position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .chain import ChainParams
from .fock import FockState, apply_create, apply_create_local, linear_combine, vacuum

__all__ = [
    "StateExprError",
    "Scalar",
    "Create",
    "Vac",
    "Product",
    "Sum",
    "parse_state_expr",
    "pretty",
    "evaluate_expr",
    "build_state",
]


class StateExprError(ValueError):
    """Parse or evaluation error, with the offending character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (position {pos})")
        self.pos = pos


# --- AST ------------------------------------------------------------------
# Node positions are carried for diagnostics but excluded from equality, so
# parse -> pretty -> parse round-trips to an identical tree.


@dataclass(frozen=True)
class Scalar:
    value: complex
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Create:
    kind: str  # "a" (wave-number mode) or "b" (site)
    index: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Vac:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Product:
    factors: tuple
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple
    pos: int = field(default=0, compare=False)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>vac|a|b|i)"
    r"|(?P<punct>[\[\]()+\-]))"
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            stripped = src[pos:].lstrip()
            if not stripped:  # trailing whitespace only
                break
            at = len(src) - len(stripped)
            raise StateExprError(f"unexpected character {stripped[0]!r}", at)
        if match.lastgroup == "num":
            tokens.append(("num", match.group("num"), match.start("num")))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append((match.group("punct"), match.group("punct"), match.start("punct")))
        pos = match.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.take()
        if tok[0] != kind:
            raise StateExprError(f"expected {what}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    # expr := ['+'|'-'] term (('+'|'-') term)*
    def parse_expr(self):
        start = self.peek()[2]
        negate = False
        if self.peek()[0] in ("+", "-"):
            negate = self.take()[0] == "-"
        terms = [self._signed_term(self.parse_term(), negate)]
        while self.peek()[0] in ("+", "-"):
            negate = self.take()[0] == "-"
            terms.append(self._signed_term(self.parse_term(), negate))
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), pos=start)

    @staticmethod
    def _signed_term(term, negate):
        if not negate:
            return term
        if isinstance(term, Scalar):
            return Scalar(-term.value, pos=term.pos)
        if isinstance(term, Product) and isinstance(term.factors[0], Scalar):
            head = term.factors[0]
            return Product((Scalar(-head.value, pos=head.pos),) + term.factors[1:],
                           pos=term.pos)
        factors = term.factors if isinstance(term, Product) else (term,)
        return Product((Scalar(-1.0 + 0.0j, pos=term.pos),) + factors, pos=term.pos)

    # term := factor+
    def parse_term(self):
        start = self.peek()[2]
        factors = [self.parse_factor()]
        while self.peek()[0] in ("num", "name", "("):
            factors.append(self.parse_factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), pos=start)

    def parse_factor(self):
        kind, text, pos = self.take()
        if kind == "num":
            value = float(text)
            if self.peek()[:2] == ("name", "i"):
                self.take()
                return Scalar(complex(0.0, value), pos=pos)
            return Scalar(complex(value, 0.0), pos=pos)
        if kind == "name":
            if text == "vac":
                return Vac(pos=pos)
            if text == "i":
                return Scalar(1j, pos=pos)
            # a[...] or b[...]
            self.expect("[", f"'[' after {text!r}")
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            elif self.peek()[0] == "+":
                self.take()
            num = self.expect("num", "an integer index")
            if not num[1].isdigit():
                raise StateExprError(f"index must be an integer, found {num[1]!r}", num[2])
            self.expect("]", "']'")
            return Create(kind=text, index=sign * int(num[1]), pos=pos)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")", "')'")
            return inner
        raise StateExprError(
            f"expected a factor, found {text or 'end of input'!r}", pos
        )


# --- validation -----------------------------------------------------------

_SCALAR, _OP, _STATE = "scalar", "operator", "state"


def _infer_type(node):
    if isinstance(node, Scalar):
        return _SCALAR
    if isinstance(node, Create):
        return _OP
    if isinstance(node, Vac):
        return _STATE
    if isinstance(node, Sum):
        kinds = [_infer_type(t) for t in node.terms]
        first = kinds[0]
        for t, k in zip(node.terms[1:], kinds[1:]):
            if k != first:
                raise StateExprError(f"cannot add a {k} to a {first}", t.pos)
        return first
    if isinstance(node, Product):
        acc = _infer_type(node.factors[-1])
        for factor in reversed(node.factors[:-1]):
            kind = _infer_type(factor)
            if kind == _STATE:
                raise StateExprError("a state can only stand last in a product", factor.pos)
            if kind == _SCALAR:
                continue  # scalars scale anything
            if acc == _SCALAR:
                acc = _OP
            elif acc in (_OP, _STATE):
                pass  # operator applied to operator or state keeps the type
        return acc
    raise TypeError(f"unknown node {node!r}")


def _check_indices(node, params: ChainParams):
    if isinstance(node, Create):
        if node.kind == "a":
            h = params.max_wavenumber
            if not -h <= node.index <= h:
                raise StateExprError(
                    f"wave number {node.index} out of range -{h}..{h} for {params.n_sites} sites",
                    node.pos,
                )
        else:
            if not 1 <= node.index <= params.n_sites:
                raise StateExprError(
                    f"site {node.index} out of range 1..{params.n_sites}", node.pos
                )
    elif isinstance(node, (Sum, Product)):
        for child in node.terms if isinstance(node, Sum) else node.factors:
            _check_indices(child, params)


def parse_state_expr(src: str, n_sites: int):
    """Parse a state expression for a chain with ``n_sites`` sites.

    Returns the AST root; raises :class:`StateExprError` with a character
    position on syntax errors, out-of-range indices, or expressions that do
    not produce a state (e.g. an operator chain with no ``vac``).
    """
    if not src or not src.strip():
        raise StateExprError("empty expression", 0)
    params = ChainParams(n_sites=n_sites)
    parser = _Parser(_tokenize(src))
    ast = parser.parse_expr()
    trailing = parser.peek()
    if trailing[0] != "end":
        raise StateExprError(f"unexpected {trailing[1]!r} after expression", trailing[2])
    _check_indices(ast, params)
    if _infer_type(ast) != _STATE:
        raise StateExprError("expression must apply its operators to 'vac'", ast.pos)
    return ast


# --- pretty printing -------------------------------------------------------


def _fmt_scalar(value: complex) -> str:
    if value.imag == 0:
        return repr(value.real)
    if value.real == 0:
        if value.imag == 1:
            return "i"
        if value.imag == -1:
            return "-i"
        return repr(value.imag) + "i"
    # composite scalars never come out of the parser, but print them anyway
    return f"({repr(value.real)} + {repr(value.imag)}i)"


def _pretty_factor(node) -> str:
    text = pretty(node)
    return f"({text})" if isinstance(node, Sum) else text


def _negated_head(term):
    """If the term starts with a negative scalar, return (positive_term, True)."""
    if isinstance(term, Scalar):
        neg = term.value.real < 0 or (term.value.real == 0 and term.value.imag < 0)
        return (Scalar(-term.value, pos=term.pos), True) if neg else (term, False)
    if isinstance(term, Product) and isinstance(term.factors[0], Scalar):
        head, flipped = _negated_head(term.factors[0])
        if flipped:
            rest = term.factors[1:]
            if head.value == 1:
                return (rest[0] if len(rest) == 1 else Product(rest, pos=term.pos)), True
            return Product((head,) + rest, pos=term.pos), True
    return term, False


def pretty(node) -> str:
    """Canonical text for an AST; parsing it back yields an equal tree."""
    if isinstance(node, Scalar):
        return _fmt_scalar(node.value)
    if isinstance(node, Create):
        return f"{node.kind}[{node.index}]"
    if isinstance(node, Vac):
        return "vac"
    if isinstance(node, Product):
        return " ".join(_pretty_factor(f) for f in node.factors)
    if isinstance(node, Sum):
        parts = [pretty(node.terms[0])]
        for term in node.terms[1:]:
            positive, flipped = _negated_head(term)
            parts.append(("- " if flipped else "+ ") + pretty(positive))
        return " ".join(parts)
    raise TypeError(f"unknown node {node!r}")


# --- evaluation ------------------------------------------------------------


def _eval(node, params: ChainParams):
    """Evaluate to ('scalar', complex) | ('op', {monomial: coeff}) | ('state', FockState)."""
    if isinstance(node, Scalar):
        return ("scalar", node.value)
    if isinstance(node, Create):
        return ("op", {((node.kind, node.index),): 1.0 + 0.0j})
    if isinstance(node, Vac):
        return ("state", vacuum(params))
    if isinstance(node, Sum):
        kinds_values = [_eval(t, params) for t in node.terms]
        kind = kinds_values[0][0]
        if kind == "scalar":
            return ("scalar", sum(v for _, v in kinds_values))
        if kind == "op":
            merged = {}
            for _, poly in kinds_values:
                for mono, coeff in poly.items():
                    merged[mono] = merged.get(mono, 0.0 + 0.0j) + coeff
            return ("op", {m: c for m, c in merged.items() if c != 0})
        return ("state", linear_combine([(1.0, v) for _, v in kinds_values]))
    if isinstance(node, Product):
        kind, acc = _eval(node.factors[-1], params)
        for factor in reversed(node.factors[:-1]):
            fkind, fval = _eval(factor, params)
            kind, acc = _combine(fkind, fval, kind, acc, factor.pos)
        return (kind, acc)
    raise TypeError(f"unknown node {node!r}")


def _combine(lkind, lval, rkind, rval, pos):
    if lkind == "scalar":
        if rkind == "scalar":
            return ("scalar", lval * rval)
        if rkind == "op":
            return ("op", {m: lval * c for m, c in rval.items()})
        return ("state", linear_combine([(lval, rval)]))
    if lkind == "op":
        if rkind == "scalar":
            return ("op", {m: c * rval for m, c in lval.items()})
        if rkind == "op":
            merged = {}
            for m1, c1 in sorted(lval.items()):
                for m2, c2 in sorted(rval.items()):
                    mono = tuple(sorted(m1 + m2))
                    merged[mono] = merged.get(mono, 0.0 + 0.0j) + c1 * c2
            return ("op", merged)
        # operator applied to a state: expand the polynomial term by term
        pairs = [(coeff, _apply_monomial(mono, rval)) for mono, coeff in sorted(lval.items())]
        return ("state", linear_combine(pairs))
    raise StateExprError("a state can only stand last in a product", pos)


def _apply_monomial(mono, state: FockState) -> FockState:
    out = state
    for kind, index in reversed(mono):
        out = apply_create(out, index) if kind == "a" else apply_create_local(out, index)
    return out


def evaluate_expr(node, params: ChainParams) -> FockState:
    """Evaluate a parsed expression to the state it denotes."""
    kind, value = _eval(node, params)
    if kind != "state":
        raise StateExprError("expression must apply its operators to 'vac'",
                             getattr(node, "pos", 0))
    return value


def build_state(src: str, params: ChainParams):
    """Parse and evaluate in one step; returns (state, canonical label)."""
    ast = parse_state_expr(src, params.n_sites)
    return evaluate_expr(ast, params), pretty(ast)
