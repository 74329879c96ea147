"""Ring expressions: parsing, canonical rendering and elaboration.

Grammar (whitespace between tokens is ignored)::

    expr     := atom ( "x" atom )*
    atom     := "Z" nat
              | "GF(" nat ")"
              | "M" nat "(" expr ")"
              | "Z" nat "[x]/(" poly ")"
              | "(" expr ")"
    poly     := monomial ( "+" monomial )*
    monomial := nat | nat "x^" nat | "x^" nat | nat "x" | "x"

At expression level ``x`` is the direct product; inside ``/( ... )`` it is
the indeterminate.
"""
from dataclasses import dataclass

from .errors import CapacityError, ExprSemanticError, ExprSyntaxError
from .ring import (
    DEFAULT_MAX_ORDER,
    DEFAULT_MAX_TABLE_ORDER,
    Polynomial,
    make_gf,
    make_matrix_ring,
    make_poly_quotient,
    make_product,
    make_zn,
    prime_power,
    render_poly,
)


@dataclass(frozen=True)
class ZMod:
    n: int


@dataclass(frozen=True)
class GF:
    q: int


@dataclass(frozen=True)
class Product:
    items: tuple


@dataclass(frozen=True)
class Matrix:
    k: int
    inner: object


@dataclass(frozen=True)
class PolyQuotient:
    n: int
    # lowest degree first
    coefficients: tuple


def render(node) -> str:
    if isinstance(node, ZMod):
        return f"Z{node.n}"
    if isinstance(node, GF):
        return f"GF({node.q})"
    if isinstance(node, Matrix):
        return f"M{node.k}({render(node.inner)})"
    if isinstance(node, PolyQuotient):
        return f"Z{node.n}[x]/({render_poly(node.coefficients)})"
    if isinstance(node, Product):
        return " x ".join(f"({render(i)})" if isinstance(i, Product) else render(i)
                          for i in node.items)
    raise TypeError(f"not a ring expression node: {node!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.fail((repr(token),))

    def fail(self, expected):
        self.skip()
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ExprSyntaxError(f"unexpected {found}", self.offset(), expected)

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(("natural number",))
        return int(self.text[start:self.pos])

    def at_nat(self) -> bool:
        self.skip()
        return self.pos < len(self.text) and self.text[self.pos].isdigit()

    # grammar ----------------------------------------------------------------
    def parse(self):
        node = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.fail(("'x'", "end of input"))
        return node

    def expr(self):
        items = [self.atom()]
        while self.accept("x"):
            items.append(self.atom())
        return items[0] if len(items) == 1 else Product(tuple(items))

    def atom(self):
        self.skip()
        start = self.pos
        if self.accept("GF"):
            self.expect("(")
            q = self.nat()
            self.expect(")")
            if prime_power(q) is None:
                raise ExprSemanticError(f"GF({q}): {q} is not a prime power", self.offset(start))
            return GF(q)
        if self.accept("Z"):
            n = self.nat()
            if n < 2:
                raise ExprSemanticError(f"Z{n}: modulus must be at least 2", self.offset(start))
            if self.accept("["):
                self.expect("x")
                self.expect("]")
                self.expect("/")
                self.expect("(")
                poly_start = self.pos
                coeffs = self.poly(n)
                self.expect(")")
                if not coeffs or len(coeffs) < 2 or coeffs[-1] != 1:
                    raise ExprSemanticError("quotient modulus must be monic of degree >= 1",
                                            self.offset(poly_start))
                return PolyQuotient(n, coeffs)
            return ZMod(n)
        if self.accept("M"):
            k = self.nat()
            if k < 1:
                raise ExprSemanticError(f"M{k}: matrix size must be at least 1", self.offset(start))
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Matrix(k, inner)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail(("'Z'", "'GF('", "'M'", "'('"))

    def poly(self, n: int) -> tuple:
        terms = {}
        while True:
            coeff, degree = self.monomial()
            terms[degree] = terms.get(degree, 0) + coeff
            if not self.accept("+"):
                break
        top = max(terms)
        return Polynomial(n, tuple(terms.get(d, 0) for d in range(top + 1))).coefficients

    def monomial(self):
        coeff = self.nat() if self.at_nat() else None
        if self.accept("x"):
            degree = self.nat() if self.accept("^") else 1
            return (1 if coeff is None else coeff), degree
        if coeff is None:
            self.fail(("natural number", "'x'"))
        return coeff, 0


def parse_ring_expr(text: str):
    """Parse ``text`` into a ring expression tree."""
    return _Parser(text).parse()


def elaborate(node, *, max_table_order=DEFAULT_MAX_TABLE_ORDER, max_order=DEFAULT_MAX_ORDER):
    """Build the ring described by an expression tree (or by expression text)."""
    if isinstance(node, str):
        node = parse_ring_expr(node)
    opts = dict(max_table_order=max_table_order, max_order=max_order)
    label = render(node)
    try:
        if isinstance(node, ZMod):
            ring = make_zn(node.n, **opts)
        elif isinstance(node, GF):
            p, s = prime_power(node.q)
            ring = make_gf(p, s, **opts)
        elif isinstance(node, PolyQuotient):
            ring = make_poly_quotient(node.n, Polynomial(node.n, node.coefficients), **opts)
        elif isinstance(node, Product):
            parts = [elaborate(i, **opts) for i in node.items]
            ring = make_product(parts, **opts)
        elif isinstance(node, Matrix):
            ring = make_matrix_ring(elaborate(node.inner, **opts), node.k, **opts)
        else:
            raise TypeError(f"not a ring expression node: {node!r}")
    except CapacityError as exc:
        if str(exc).startswith("in "):
            raise
        raise CapacityError(f"in {label}: {exc}") from exc
    ring.label = label
    ring.meta["expr"] = node
    return ring
