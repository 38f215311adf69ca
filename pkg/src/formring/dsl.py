"""Input language: declarations plus commands, parsed with line/column
diagnostics.

Statements end with ';' and '#' starts a line comment.  Declarations:

    char 32003;
    vars x, y, z;
    ideal I = x^2, x*y, x*z - y^r, y^(r+1), x*z^2;
    synthetic_table T = {(1, 2): 10, (2, 0): 1};

Commands name a declared object and may carry key=value options:

    tangent_cone I r=3;
    table I imax=1 window=-4..8;
    check cor41 I r=3..5;

Exponents in ideal declarations are integers, the parameter `r`, or
`(r+INT)` / `(r-INT)`; a command touching a parameterized ideal must supply
`r=` with a value or range, and each value yields one materialized run.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .poly import PolyRing, Polynomial, is_prime

COMMANDS = ("tangent_cone", "table", "koszul", "stuckrad", "quasibuchsbaum",
            "gap", "diag", "localh0", "cor41")

# per command: (required option keys, allowed option keys)
COMMAND_OPTIONS: dict[str, tuple[frozenset, frozenset]] = {
    "tangent_cone": (frozenset(), frozenset({"r"})),
    "table": (frozenset(), frozenset({"window", "tmax", "margin", "imax", "r"})),
    "koszul": (frozenset({"i", "n"}), frozenset({"i", "n", "t", "r"})),
    "stuckrad": (frozenset(), frozenset({"window", "tmax", "margin", "r"})),
    "quasibuchsbaum": (frozenset(), frozenset({"window", "tmax", "margin", "r"})),
    "gap": (frozenset(), frozenset({"t", "window", "tmax", "margin", "r"})),
    "diag": (frozenset(), frozenset({"t", "window", "tmax", "margin", "r"})),
    "localh0": (frozenset(), frozenset({"r"})),
    "cor41": (frozenset(), frozenset({"window", "tmax", "margin", "r"})),
}

RANGE_KEYS = frozenset({"window", "r"})
PARAMETER = "r"


# -- Tokens -----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str      # "ident" | "int" | "punct" | "eof"
    text: str
    line: int
    col: int


_PUNCT2 = ("..",)
_PUNCT1 = ";,=^*+-(){}:"


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text[i:i + 2] in _PUNCT2:
            tokens.append(Token("punct", text[i:i + 2], line, col))
            i += 2
            col += 2
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c in _PUNCT1:
            tokens.append(Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# -- Session model ----------------------------------------------------------

@dataclass(frozen=True)
class ExponentTemplate:
    """Exponent is `offset` or, when parameterized, the parameter plus it."""

    offset: int
    parameterized: bool = False

    def value(self, r: int | None) -> int:
        if not self.parameterized:
            return self.offset
        if r is None:
            raise ValueError("parameterized exponent needs a parameter value")
        return r + self.offset

    def render(self) -> str:
        if not self.parameterized:
            return str(self.offset)
        if self.offset == 0:
            return PARAMETER
        sign = "+" if self.offset > 0 else "-"
        return f"({PARAMETER}{sign}{abs(self.offset)})"


@dataclass(frozen=True)
class TermTemplate:
    coefficient: int
    factors: tuple[tuple[int, ExponentTemplate], ...]  # (variable index, exp)


@dataclass(frozen=True)
class PolyTemplate:
    terms: tuple[TermTemplate, ...]

    @property
    def parameterized(self) -> bool:
        return any(e.parameterized for t in self.terms for _, e in t.factors)

    def materialize(self, ring: PolyRing, r: int | None = None) -> Polynomial:
        result = ring.zero()
        for term in self.terms:
            exps = [0] * ring.nvars
            for var_index, tmpl in term.factors:
                v = tmpl.value(r)
                if v < 0:
                    raise ValueError(
                        f"exponent {tmpl.render()} is negative at "
                        f"{PARAMETER}={r}")
                exps[var_index] += v
            mono = ring.from_terms({tuple(exps): term.coefficient})
            result = result + mono
        return result

    def render(self, variables: tuple[str, ...]) -> str:
        parts: list[str] = []
        for term in self.terms:
            factors = []
            for var_index, tmpl in term.factors:
                name = variables[var_index]
                if tmpl.parameterized or tmpl.value(None) != 1:
                    factors.append(f"{name}^{tmpl.render()}")
                else:
                    factors.append(name)
            coeff = term.coefficient
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class IdealDecl:
    name: str
    polynomials: tuple[PolyTemplate, ...]

    @property
    def parameterized(self) -> bool:
        return any(p.parameterized for p in self.polynomials)


@dataclass(frozen=True)
class TableDecl:
    name: str
    entries: tuple[tuple[tuple[int, int], int], ...]  # ((i, n), dim) pairs

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)


@dataclass(frozen=True)
class Command:
    name: str
    target: str
    options: tuple[tuple[str, object], ...]  # key -> int or (lo, hi)
    check: bool = False
    line: int = 0
    col: int = 0

    def option(self, key: str, default=None):
        for k, v in self.options:
            if k == key:
                return v
        return default

    def render(self) -> str:
        head = ("check " if self.check else "") + self.name + " " + self.target
        parts = []
        for k, v in sorted(self.options):
            if isinstance(v, tuple):
                parts.append(f"{k}={v[0]}..{v[1]}")
            else:
                parts.append(f"{k}={v}")
        return " ".join([head] + parts)


def _commands_equal(a: Command, b: Command) -> bool:
    return (a.name == b.name and a.target == b.target and a.check == b.check
            and dict(a.options) == dict(b.options))


@dataclass
class Session:
    characteristic: int | None = None
    variables: tuple[str, ...] = ()
    ideals: dict[str, IdealDecl] = field(default_factory=dict)
    tables: dict[str, TableDecl] = field(default_factory=dict)
    commands: tuple[Command, ...] = ()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Session):
            return NotImplemented
        if (self.characteristic != other.characteristic
                or self.variables != other.variables
                or self.ideals != other.ideals
                or {k: v.as_dict() for k, v in self.tables.items()}
                != {k: v.as_dict() for k, v in other.tables.items()}):
            return False
        return (len(self.commands) == len(other.commands)
                and all(_commands_equal(a, b)
                        for a, b in zip(self.commands, other.commands)))


# -- Parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, default_characteristic: int | None = None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.session = Session(characteristic=default_characteristic)
        self.explicit_char = False

    # token helpers
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect_punct(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            shown = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected {text!r}, found {shown!r}", tok)
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            shown = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected {what}, found {shown!r}", tok)
        return self.advance()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            shown = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected integer, found {shown!r}", tok)
        self.advance()
        return int(tok.text)

    def signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "punct" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        return sign * self.expect_int()

    # statement dispatch
    def parse(self) -> Session:
        while self.peek().kind != "eof":
            self.statement()
        return self.session

    def statement(self):
        tok = self.peek()
        if tok.kind != "ident":
            self.fail(f"expected a statement, found {tok.text!r}")
        word = tok.text
        if word == "char":
            self.char_statement()
        elif word == "vars":
            self.vars_statement()
        elif word == "ideal":
            self.ideal_statement()
        elif word == "synthetic_table":
            self.table_statement()
        elif word == "check" or word in COMMANDS:
            self.command_statement()
        else:
            self.fail(f"unknown statement or command {word!r}", tok)

    def char_statement(self):
        tok = self.advance()
        if self.explicit_char:
            self.fail("characteristic already declared", tok)
        value = self.expect_int()
        if not is_prime(value):
            self.fail(f"{value} is not prime", tok)
        self.session.characteristic = value
        self.explicit_char = True
        self.expect_punct(";")

    def vars_statement(self):
        tok = self.advance()
        if self.session.variables:
            self.fail("variables already declared", tok)
        names = [self.expect_ident("variable name").text]
        while self.peek().kind == "punct" and self.peek().text == ",":
            self.advance()
            names.append(self.expect_ident("variable name").text)
        if len(set(names)) != len(names):
            self.fail("duplicate variable name", tok)
        self.session.variables = tuple(names)
        self.expect_punct(";")

    def ideal_statement(self):
        tok = self.advance()
        if self.session.characteristic is None:
            self.fail("characteristic not declared", tok)
        if not self.session.variables:
            self.fail("variables not declared", tok)
        name_tok = self.expect_ident("ideal name")
        self.check_fresh_name(name_tok)
        self.expect_punct("=")
        polys = [self.polynomial()]
        while self.peek().kind == "punct" and self.peek().text == ",":
            self.advance()
            polys.append(self.polynomial())
        self.expect_punct(";")
        self.session.ideals[name_tok.text] = IdealDecl(
            name_tok.text, tuple(polys))

    def table_statement(self):
        self.advance()
        name_tok = self.expect_ident("table name")
        self.check_fresh_name(name_tok)
        self.expect_punct("=")
        self.expect_punct("{")
        entries: list[tuple[tuple[int, int], int]] = []
        seen: set[tuple[int, int]] = set()
        if not (self.peek().kind == "punct" and self.peek().text == "}"):
            while True:
                entry_tok = self.peek()
                self.expect_punct("(")
                i = self.signed_int()
                self.expect_punct(",")
                n = self.signed_int()
                self.expect_punct(")")
                self.expect_punct(":")
                dim = self.signed_int()
                if i < 0:
                    self.fail("cohomology index must be non-negative",
                              entry_tok)
                if dim < 0:
                    self.fail("dimension must be non-negative", entry_tok)
                if (i, n) in seen:
                    self.fail(f"duplicate table entry ({i}, {n})", entry_tok)
                seen.add((i, n))
                entries.append(((i, n), dim))
                if self.peek().kind == "punct" and self.peek().text == ",":
                    self.advance()
                    continue
                break
        self.expect_punct("}")
        self.expect_punct(";")
        self.session.tables[name_tok.text] = TableDecl(
            name_tok.text, tuple(entries))

    def check_fresh_name(self, tok: Token):
        name = tok.text
        if name in self.session.ideals or name in self.session.tables:
            self.fail(f"name {name!r} already declared", tok)
        if name in self.session.variables:
            self.fail(f"name {name!r} is a variable", tok)

    def command_statement(self):
        check = False
        tok = self.peek()
        if tok.text == "check":
            check = True
            self.advance()
            tok = self.peek()
        if tok.kind != "ident" or tok.text not in COMMANDS:
            known = ", ".join(COMMANDS)
            self.fail(f"unknown command {tok.text!r} (expected one of {known})",
                      tok)
        name = self.advance().text
        target_tok = self.expect_ident("target name")
        target = target_tok.text
        is_ideal = target in self.session.ideals
        is_table = target in self.session.tables
        if not (is_ideal or is_table):
            self.fail(f"undeclared name {target!r}", target_tok)
        if is_table and name not in ("gap", "diag"):
            self.fail(f"command {name!r} needs an ideal, "
                      f"but {target!r} is a synthetic table", target_tok)
        required, allowed = COMMAND_OPTIONS[name]
        options: list[tuple[str, object]] = []
        keys: set[str] = set()
        while self.peek().kind == "ident":
            key_tok = self.advance()
            key = key_tok.text
            if key not in allowed:
                self.fail(f"option {key!r} not accepted by {name!r}", key_tok)
            if key in keys:
                self.fail(f"duplicate option {key!r}", key_tok)
            self.expect_punct("=")
            lo = self.signed_int()
            value: object = lo
            if self.peek().kind == "punct" and self.peek().text == "..":
                if key not in RANGE_KEYS:
                    self.fail(f"option {key!r} does not take a range", key_tok)
                self.advance()
                hi = self.signed_int()
                if hi < lo:
                    self.fail(f"empty range {lo}..{hi}", key_tok)
                value = (lo, hi)
            keys.add(key)
            options.append((key, value))
        missing = required - keys
        if missing:
            self.fail(f"command {name!r} is missing option(s) "
                      + ", ".join(sorted(missing)), tok)
        if is_table and "r" in keys:
            self.fail("option 'r' does not apply to a synthetic table", tok)
        if is_ideal and self.session.ideals[target].parameterized \
                and "r" not in keys:
            self.fail(f"ideal {target!r} is parameterized; "
                      f"supply {PARAMETER}=VALUE or {PARAMETER}=LO..HI", tok)
        if is_ideal and not self.session.ideals[target].parameterized \
                and "r" in keys:
            self.fail(f"ideal {target!r} has no parameter", tok)
        self.expect_punct(";")
        self.session.commands = self.session.commands + (
            Command(name, target, tuple(options), check, tok.line, tok.col),)

    # polynomial templates
    def polynomial(self) -> PolyTemplate:
        terms: list[TermTemplate] = []
        sign = 1
        tok = self.peek()
        if tok.kind == "punct" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        terms.append(self.term(sign))
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text in "+-":
                self.advance()
                terms.append(self.term(-1 if tok.text == "-" else 1))
            else:
                break
        return PolyTemplate(tuple(terms))

    def term(self, sign: int) -> TermTemplate:
        tok = self.peek()
        coeff = 1
        factors: list[tuple[int, ExponentTemplate]] = []
        if tok.kind == "int":
            coeff = self.expect_int()
            if self.peek().kind == "punct" and self.peek().text == "*":
                self.advance()
                factors = self.factors()
            elif self.peek().kind == "ident" \
                    and self.peek().text in self.session.variables:
                factors = self.factors()
        elif tok.kind == "ident":
            factors = self.factors()
        else:
            self.fail(f"expected a term, found {tok.text!r}", tok)
        return TermTemplate(sign * coeff, tuple(factors))

    def factors(self) -> list[tuple[int, ExponentTemplate]]:
        out = [self.factor()]
        while self.peek().kind == "punct" and self.peek().text == "*":
            self.advance()
            out.append(self.factor())
        return out

    def factor(self) -> tuple[int, ExponentTemplate]:
        tok = self.expect_ident("variable")
        if tok.text not in self.session.variables:
            self.fail(f"undeclared variable {tok.text!r}", tok)
        var_index = self.session.variables.index(tok.text)
        exp = ExponentTemplate(1)
        if self.peek().kind == "punct" and self.peek().text == "^":
            self.advance()
            exp = self.exponent()
        return var_index, exp

    def exponent(self) -> ExponentTemplate:
        tok = self.peek()
        if tok.kind == "int":
            return ExponentTemplate(self.expect_int())
        if tok.kind == "ident" and tok.text == PARAMETER \
                and PARAMETER not in self.session.variables:
            self.advance()
            return ExponentTemplate(0, parameterized=True)
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            head = self.expect_ident("parameter")
            if head.text != PARAMETER or PARAMETER in self.session.variables:
                self.fail(f"unknown parameter {head.text!r}", head)
            op = self.peek()
            if op.kind != "punct" or op.text not in "+-":
                self.fail("expected '+' or '-' in parameterized exponent", op)
            self.advance()
            value = self.expect_int()
            self.expect_punct(")")
            offset = value if op.text == "+" else -value
            return ExponentTemplate(offset, parameterized=True)
        self.fail("expected an exponent: integer, "
                  f"{PARAMETER!r}, or ({PARAMETER}+INT)", tok)


def parse_session(text: str,
                  default_characteristic: int | None = None) -> Session:
    """Parse input text into a Session; raises ParseError with line/column.

    A default characteristic (for instance from a command-line flag) fills
    in when the text declares none; an explicit `char` statement wins.
    """
    return _Parser(text, default_characteristic).parse()


# -- Pretty printer ---------------------------------------------------------

def pretty_print(session: Session) -> str:
    """Canonical text whose parse equals the given session."""
    lines: list[str] = []
    if session.characteristic is not None:
        lines.append(f"char {session.characteristic};")
    if session.variables:
        lines.append("vars " + ", ".join(session.variables) + ";")
    for decl in session.ideals.values():
        body = ", ".join(p.render(session.variables)
                         for p in decl.polynomials)
        lines.append(f"ideal {decl.name} = {body};")
    for table in session.tables.values():
        body = ", ".join(f"({i}, {n}): {d}" for (i, n), d in table.entries)
        lines.append(f"synthetic_table {table.name} = {{{body}}};")
    for cmd in session.commands:
        lines.append(cmd.render() + ";")
    return "\n".join(lines) + ("\n" if lines else "")
