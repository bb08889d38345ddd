"""Reader and printer for the line-oriented presentation format (``.ghopf`` files).

One statement per line, ``#`` starts a comment::

    algebra a1 over GF(2)
    gen xi1 deg 1
    gen xi2 deg 3
    rel xi1^4 = 0
    rel xi2^2 = 0
    counit xi1 = 0
    counit xi2 = 0
    comul xi1 = xi1 (x) 1 + 1 (x) xi1
    comul xi2 = xi2 (x) 1 + xi1^2 (x) xi1 + 1 (x) xi2
    antipode xi2 = xi2 + xi1^3

Fields are ``GF(p)``, ``GF(p,n)`` or ``QQ``. Scalars are integers, fractions
``a/b``, or ``[c0,c1,...]`` for an element ``c0 + c1 g + ...`` of ``GF(p,n)``
written in the generator ``g`` of its fixed modulus.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..exactfield import FieldError, FieldSpec, Raw, get_field
from ..gralg.presentation import (
    Generator,
    Monomial,
    Poly,
    Presentation,
    PresentationError,
    Relation,
    TensorPoly,
    normalize_poly,
    normalize_tensor_poly,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<tensor>\(x\)|⊗)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<int>\d+)
  | (?P<op>[\^*+\-=/(),\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def _tokenize(text: str, lineno: int) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


class _Line:
    """Cursor over the tokens of one line."""

    def __init__(self, text: str, lineno: int):
        self.tokens = _tokenize(text, lineno)
        self.i = 0
        self.lineno = lineno

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        t = tok or self.tok
        return ParseError(msg, self.lineno, t.col)

    def take(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            got = t.text or "end of line"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.i += 1
        return t

    def peek(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.peek(kind, text):
            return self.take(kind, text)
        return None

    def expect_end(self) -> None:
        if not self.peek("end"):
            raise self.error(f"unexpected {self.tok.text!r}")

    def integer(self) -> int:
        return int(self.take("int").text)


class _Builder:
    def __init__(self):
        self.name: str | None = None
        self.spec: FieldSpec | None = None
        self.truncation: int | None = None
        self.gens: list[Generator] = []
        self.rels: dict[str, Relation] = {}
        self.counit: dict[str, Raw] = {}
        self.comul: dict[str, TensorPoly] = {}
        self.antipode: dict[str, Poly] = {}

    def index(self, cur: _Line, tok: Token) -> int:
        for i, g in enumerate(self.gens):
            if g.name == tok.text:
                return i
        raise cur.error(f"unknown generator {tok.text!r}", tok)

    def degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.gens))


def _field_spec(cur: _Line) -> FieldSpec:
    t = cur.take("ident")
    if t.text == "QQ":
        return FieldSpec.rationals()
    if t.text != "GF":
        raise cur.error(f"unknown field {t.text!r}; use GF(p), GF(p,n) or QQ", t)
    cur.take("op", "(")
    ptok = cur.tok
    p = cur.integer()
    n = 1
    if cur.accept("op", ","):
        n = cur.integer()
    cur.take("op", ")")
    try:
        return FieldSpec.gf(p, n)
    except (FieldError, ValueError) as exc:
        raise cur.error(str(exc), ptok) from None


def _scalar(cur: _Line, b: _Builder) -> Raw:
    F = get_field(b.spec)
    start = cur.tok
    if cur.accept("op", "["):
        digits = [cur.integer()]
        while cur.accept("op", ","):
            digits.append(cur.integer())
        cur.take("op", "]")
        if F.p == 0:
            raise cur.error("coefficient lists are only meaningful over GF(p,n)", start)
        if len(digits) > F.n:
            raise cur.error(f"coefficient list longer than the degree of {b.spec}", start)
        return F.from_digits([d % F.p for d in digits])
    num = cur.integer()
    if cur.accept("op", "/"):
        den_tok = cur.tok
        den = cur.integer()
        if den == 0:
            raise cur.error("division by zero", den_tok)
        try:
            return F.from_fraction(Fraction(num, den))
        except FieldError as exc:
            raise cur.error(str(exc), start) from None
    return F.from_int(num)


def _monomial(cur: _Line, b: _Builder) -> Monomial:
    """``1`` or a product of ``name`` / ``name^k`` factors."""
    exps = [0] * len(b.gens)
    if cur.peek("int", "1"):
        cur.take("int")
        return tuple(exps)
    while True:
        t = cur.take("ident")
        i = b.index(cur, t)
        e = 1
        if cur.accept("op", "^"):
            e = cur.integer()
        exps[i] += e
        if cur.peek("op", "*") and cur.tokens[cur.i + 1].kind == "ident":
            cur.take("op", "*")
            continue
        return tuple(exps)


def _signed_terms(cur: _Line, b: _Builder, term):
    F = get_field(b.spec)
    out = []
    neg = bool(cur.accept("op", "-"))
    while True:
        c, body = term()
        out.append((body, F.neg(c) if neg else c))
        if cur.accept("op", "+"):
            neg = False
        elif cur.accept("op", "-"):
            neg = True
        else:
            return out


def _poly_term(cur: _Line, b: _Builder) -> tuple[Raw, Monomial]:
    zero = tuple([0] * len(b.gens))
    if cur.peek("int") or cur.peek("op", "["):
        c = _scalar(cur, b)
        if cur.accept("op", "*"):
            return c, _monomial(cur, b)
        return c, zero
    return 1, _monomial(cur, b)


def _polynomial(cur: _Line, b: _Builder) -> Poly:
    if cur.peek("int", "0") and cur.tokens[cur.i + 1].kind == "end":
        cur.take("int")
        return ()
    terms = _signed_terms(cur, b, lambda: _poly_term(cur, b))
    return normalize_poly(b.spec, [(m, c) for m, c in terms])


def _tensor_term(cur: _Line, b: _Builder) -> tuple[Raw, tuple[Monomial, Monomial]]:
    c = 1
    if cur.peek("op", "[") or (cur.peek("int") and cur.tokens[cur.i + 1].text in ("*", "/")):
        c = _scalar(cur, b)
        cur.take("op", "*")
    left = _monomial(cur, b)
    cur.take("tensor")
    right = _monomial(cur, b)
    return c, (left, right)


def _statement(cur: _Line, b: _Builder) -> None:
    kw = cur.take("ident")
    word = kw.text
    if word != "algebra" and b.spec is None:
        raise cur.error("the first statement must be 'algebra NAME over FIELD'", kw)
    if word == "algebra":
        if b.spec is not None:
            raise cur.error("second 'algebra' statement", kw)
        b.name = cur.take("ident").text
        cur.take("ident", "over")
        b.spec = _field_spec(cur)
    elif word == "truncate":
        b.truncation = cur.integer()
    elif word == "gen":
        t = cur.take("ident")
        if any(g.name == t.text for g in b.gens):
            raise cur.error(f"generator {t.text!r} declared twice", t)
        if b.rels or b.counit or b.comul or b.antipode:
            raise cur.error("generators must be declared before relations and coalgebra data", kw)
        cur.take("ident", "deg")
        b.gens.append(Generator(t.text, cur.integer()))
    elif word == "rel":
        t = cur.take("ident")
        i = b.index(cur, t)
        cur.take("op", "^")
        n = cur.integer()
        cur.take("op", "=")
        rhs_tok = cur.tok
        poly = _polynomial(cur, b)
        rhs = []
        lhs_deg = n * b.gens[i].degree
        for mono, c in poly:
            d = sum(e * g.degree for e, g in zip(mono, b.gens))
            if c != 0 and d != lhs_deg:
                raise cur.error(
                    f"inhomogeneous relation: {t.text}^{n} has degree {lhs_deg} but a term on the right has degree {d}",
                    rhs_tok,
                )
            if any(e for j, e in enumerate(mono) if j != i):
                raise cur.error(f"right side of a relation may only involve {t.text}", rhs_tok)
            rhs.append((mono[i], c))
        if t.text in b.rels:
            raise cur.error(f"second relation for {t.text}", t)
        b.rels[t.text] = Relation(t.text, n, tuple(sorted(rhs)))
    elif word == "counit":
        t = cur.take("ident")
        b.index(cur, t)
        cur.take("op", "=")
        neg = bool(cur.accept("op", "-"))
        c = _scalar(cur, b)
        b.counit[t.text] = get_field(b.spec).neg(c) if neg else c
    elif word == "comul":
        t = cur.take("ident")
        b.index(cur, t)
        cur.take("op", "=")
        terms = _signed_terms(cur, b, lambda: _tensor_term(cur, b))
        b.comul[t.text] = normalize_tensor_poly(b.spec, [(m, c) for m, c in terms])
    elif word == "antipode":
        t = cur.take("ident")
        b.index(cur, t)
        cur.take("op", "=")
        b.antipode[t.text] = _polynomial(cur, b)
    else:
        raise cur.error(f"unknown statement {word!r}", kw)
    cur.expect_end()


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation; errors carry the line and column."""
    b = _Builder()
    lines = text.splitlines()
    last = 0
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        last = lineno
        _statement(_Line(body, lineno), b)
    if b.spec is None:
        raise ParseError("empty presentation", max(last, 1), 1)
    order = [g.name for g in b.gens]

    def ordered(d: dict):
        return tuple((n, d[n]) for n in order if n in d)

    p = Presentation(
        b.name,
        b.spec,
        tuple(b.gens),
        tuple(b.rels[n] for n in order if n in b.rels),
        b.truncation,
        ordered(b.counit),
        ordered(b.comul),
        ordered(b.antipode),
    )
    try:
        p.validate()
    except PresentationError as exc:
        raise ParseError(str(exc), _line_of(lines, str(exc), order), 1) from None
    return p


def _line_of(lines: list[str], message: str, names: list[str]) -> int:
    """Best guess at the line a semantic error refers to."""
    mentioned = [n for n in names if re.search(rf"\b{re.escape(n)}\b", message)]
    kinds = ("rel", "comul", "counit", "antipode")
    for kind in kinds:
        if kind in message or (kind == "rel" and "relation" in message):
            for i, line in enumerate(lines, start=1):
                words = line.split()
                if len(words) > 1 and words[0] == kind and (not mentioned or words[1].split("^")[0] in mentioned):
                    return i
    for i, line in enumerate(lines, start=1):
        words = line.split()
        if len(words) > 1 and words[0] == "gen" and words[1] in mentioned:
            return i
    return 1


# -- printing ---------------------------------------------------------------------


def _format_scalar(F, c: Raw) -> tuple[bool, str]:
    s = F.format(c)
    if s.startswith("-"):
        return True, s[1:]
    return False, s


def _format_mono(names: list[str], mono: Monomial) -> str:
    parts = []
    for n, e in zip(names, mono):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) if parts else "1"


def _join(F, items) -> str:
    """``items`` are ``(coefficient, body)``; body ``None`` means a constant."""
    out = []
    for c, body in items:
        neg, mag = _format_scalar(F, c)
        if body is None:
            text = mag
        elif mag == "1":
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append(("- " if neg else "+ ") + text)
    return " ".join(out) if out else "0"


def format_poly(p: Presentation, poly: Poly) -> str:
    F = get_field(p.field)
    names = p.generator_names
    return _join(F, [(c, None if not any(m) else _format_mono(names, m)) for m, c in poly])


def format_tensor_poly(p: Presentation, poly: TensorPoly) -> str:
    F = get_field(p.field)
    names = p.generator_names
    return _join(F, [(c, f"{_format_mono(names, l)} (x) {_format_mono(names, r)}") for (l, r), c in poly])


def print_presentation(p: Presentation) -> str:
    """Canonical text; ``parse_presentation(print_presentation(p)) == p``."""
    F = get_field(p.field)
    lines = [f"algebra {p.name} over {p.field}"]
    if p.truncation is not None:
        lines.append(f"truncate {p.truncation}")
    for g in p.generators:
        lines.append(f"gen {g.name} deg {g.degree}")
    names = p.generator_names
    for r in p.relations:
        i = names.index(r.generator)
        poly = tuple((tuple(k if j == i else 0 for j in range(len(names))), c) for k, c in r.rhs)
        lines.append(f"rel {r.generator}^{r.exponent} = {format_poly(p, poly)}")
    for name, c in p.counit:
        neg, mag = _format_scalar(F, c)
        lines.append(f"counit {name} = {'-' if neg else ''}{mag}")
    for name, poly in p.comul:
        lines.append(f"comul {name} = {format_tensor_poly(p, poly)}")
    for name, poly in p.antipode:
        lines.append(f"antipode {name} = {format_poly(p, poly)}")
    return "\n".join(lines) + "\n"


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


__all__ = [
    "ParseError",
    "format_poly",
    "format_tensor_poly",
    "load_presentation",
    "parse_presentation",
    "print_presentation",
]
