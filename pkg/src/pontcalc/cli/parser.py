"""Parsers for the bundle and ideal expression languages.

Bundle grammar (whitespace-insensitive)::

    bundle := term ( '+' term )*
    term   := ( nat '*' )? factor
    factor := 'U' '(' ident ')' | '1' | 'dual' '(' bundle ')' | '(' bundle ')'

Ideal grammar, used by ``pontcalc ideal --check``::

    check  := ideal ( 'subset' | '<=' ) ideal
    ideal  := prod ( '+' prod )*
    prod   := power ( '*' power )*
    power  := atom ( '^' nat )?
    atom   := 'J' '(' int ')' | 'L' | '(' ideal ')'

Both parsers work on UTF-8 bytes, so error offsets are byte offsets.  Any
input either parses or raises :class:`~pontcalc.errors.ParseError`.
"""

from collections import Counter
from dataclasses import dataclass

from pontcalc.bundles import FormalBundle
from pontcalc.errors import ParseError, RepeatCountError
from pontcalc.ideals import J, L, Power, Product, Sum

MAX_DEPTH = 100
MAX_DIGITS = 19
MAX_COUNT = 2 ** 63 - 1
_WS = b" \t\n\r\f\v"


@dataclass(frozen=True)
class Plane:
    root: str


@dataclass(frozen=True)
class Line:
    pass


@dataclass(frozen=True)
class BundleSum:
    left: object
    right: object


@dataclass(frozen=True)
class Repeat:
    count: int
    child: object


@dataclass(frozen=True)
class Dual:
    child: object


def _is_alpha(b):
    return 65 <= b <= 90 or 97 <= b <= 122


def _is_digit(b):
    return 48 <= b <= 57


def _is_ident(b):
    return _is_alpha(b) or _is_digit(b) or b == 95


class _Scanner:
    def __init__(self, text):
        if isinstance(text, str):
            text = text.encode("utf-8", "surrogatepass")
        self.data = bytes(text)
        self.pos = 0
        self.depth = 0

    def skip(self):
        data, n = self.data, len(self.data)
        while self.pos < n and data[self.pos] in _WS:
            self.pos += 1

    def peek(self):
        self.skip()
        return self.data[self.pos] if self.pos < len(self.data) else None

    def expect(self, char, expected=None):
        if self.peek() != ord(char):
            raise ParseError(self.pos, expected or {char})
        self.pos += 1

    def word(self):
        """Identifier at the current position, or None."""
        if self.peek() is None or not _is_alpha(self.data[self.pos]):
            return None
        start = self.pos
        while self.pos < len(self.data) and _is_ident(self.data[self.pos]):
            self.pos += 1
        return self.data[start:self.pos].decode("ascii")

    def number(self):
        start = self.pos
        while self.pos < len(self.data) and _is_digit(self.data[self.pos]):
            self.pos += 1
        return self.data[start:self.pos].decode("ascii")

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(self.pos, {"shallower nesting"}, "nesting deeper than %d" % MAX_DEPTH)

    def leave(self):
        self.depth -= 1

    def finish(self, expected):
        if self.peek() is not None:
            raise ParseError(self.pos, expected)


_FACTOR_START = frozenset({"U", "dual", "1", "("})


class _BundleParser(_Scanner):
    def bundle(self):
        self.enter()
        node = self.term()
        while self.peek() == ord("+"):
            self.pos += 1
            node = BundleSum(node, self.term())
        self.leave()
        return node

    def term(self):
        c = self.peek()
        if c is not None and _is_digit(c):
            start = self.pos
            digits = self.number()
            if self.peek() == ord("*"):
                self.pos += 1
                if len(digits.lstrip("0")) > MAX_DIGITS:
                    raise RepeatCountError(start, {"count below 2^63"}, "repeat count too large")
                count = int(digits)
                if count == 0:
                    raise RepeatCountError(start, {"positive count"}, "repeat count must be at least 1")
                if count > MAX_COUNT:
                    raise RepeatCountError(start, {"count below 2^63"}, "repeat count too large")
                return Repeat(count, self.factor())
            if digits == "1":
                return Line()
            raise ParseError(self.pos, {"*"})
        return self.factor()

    def factor(self):
        c = self.peek()
        if c == ord("("):
            self.pos += 1
            node = self.bundle()
            self.expect(")", {")", "+"})
            return node
        if c == ord("1"):
            start = self.pos
            if self.number() == "1":
                return Line()
            raise ParseError(start, {"U", "dual", "1", "("})
        start = self.pos
        name = self.word()
        if name == "U":
            self.expect("(")
            self.skip()
            root_start = self.pos
            root = self.word()
            if root is None:
                raise ParseError(root_start, {"identifier"})
            self.expect(")")
            return Plane(root)
        if name == "dual":
            self.expect("(")
            node = self.bundle()
            self.expect(")", {")", "+"})
            return Dual(node)
        raise ParseError(start, _FACTOR_START)


def parse_bundle_expr(text):
    """Parse a bundle expression into its AST."""
    p = _BundleParser(text)
    node = p.bundle()
    p.finish({"+", "end of input"})
    return node


def elaborate(ast, ambient=None):
    """Turn a bundle AST into a FormalBundle (duals elaborate to their child)."""
    roots = Counter()
    lines = 0
    stack = [(ast, 1)]
    while stack:
        node, mult = stack.pop()
        if isinstance(node, Plane):
            roots[node.root] += mult
        elif isinstance(node, Line):
            lines += mult
        elif isinstance(node, BundleSum):
            stack.append((node.left, mult))
            stack.append((node.right, mult))
        elif isinstance(node, Repeat):
            stack.append((node.child, mult * node.count))
        elif isinstance(node, Dual):
            stack.append((node.child, mult))
        else:
            raise TypeError("not a bundle AST node: %r" % (node,))
    return FormalBundle(roots, lines, ambient)


def parse_bundle(text, ambient=None):
    return elaborate(parse_bundle_expr(text), ambient)


class _IdealParser(_Scanner):
    def ideal(self):
        self.enter()
        node = self.prod()
        while self.peek() == ord("+"):
            self.pos += 1
            node = Sum(node, self.prod())
        self.leave()
        return node

    def prod(self):
        node = self.power()
        while self.peek() == ord("*"):
            self.pos += 1
            node = Product(node, self.power())
        return node

    def power(self):
        node = self.atom()
        if self.peek() == ord("^"):
            self.pos += 1
            start = self.pos
            self.skip()
            digits = self.number()
            if not digits or len(digits) > MAX_DIGITS:
                raise ParseError(start, {"exponent"})
            node = Power(node, int(digits))
        return node

    def atom(self):
        c = self.peek()
        if c == ord("("):
            self.pos += 1
            node = self.ideal()
            self.expect(")", {")", "+", "*"})
            return node
        start = self.pos
        name = self.word()
        if name == "L":
            return L()
        if name == "J":
            self.expect("(")
            self.skip()
            sign = 1
            if self.peek() == ord("-"):
                sign = -1
                self.pos += 1
            num_start = self.pos
            digits = self.number()
            if not digits or len(digits) > MAX_DIGITS:
                raise ParseError(num_start, {"integer"})
            self.expect(")")
            return J(sign * int(digits))
        raise ParseError(start, {"J", "L", "("})


def parse_ideal_expr(text):
    p = _IdealParser(text)
    node = p.ideal()
    p.finish({"+", "*", "^", "end of input"})
    return node


def parse_containment(text):
    """Split ``"A subset B"`` (or ``A <= B``) into two ideal expressions."""
    p = _IdealParser(text)
    left = p.ideal()
    p.skip()
    at = p.pos
    if p.data.startswith(b"<=", at):
        p.pos += 2
    elif p.word() == "subset":
        pass
    else:
        raise ParseError(at, {"subset", "<="})
    right = p.ideal()
    p.finish({"+", "*", "^", "end of input"})
    return left, right
