"""Recursive-descent parser for .gcs construction scripts.

Grammar (one statement per line, '#' starts a comment):

    program := { stmt NL } ;
    stmt    := "param" ID ":" ("angle" | "length")
             | ("point" | "line" | "circle") ID "=" expr [ "pick" hint ] [ "optional" ]
             | "export" ID { "," ID } ;
    expr    := "(" NUM "," NUM ")" | OPNAME "(" [ arg { "," arg } ] ")" ;
    arg     := ID | NUM | "dist" "(" ID "," ID ")" ;
    hint    := ("closest_to" | "farthest_from" | "distinct_from") "(" ID ")" | "upper" | "lower" ;

Every input yields either a whole program or exactly one ScriptError.
"""
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    ArityError,
    DuplicateName,
    KindMismatch,
    MissingPick,
    OptionalDependency,
    ScriptSyntaxError,
    UndefinedIdentifier,
    UnexpectedPick,
)
from .program import (
    ANGLE,
    ARG_ANGLE,
    ARG_CIRCLE,
    ARG_CURVE,
    ARG_LINE,
    ARG_POINT,
    ARG_RADIUS,
    ARG_SIDE,
    BARE_HINTS,
    CIRCLE,
    COORD,
    LENGTH,
    LINE,
    OBJECT_KINDS,
    OPS,
    PARAM_KINDS,
    POINT,
    REF_HINTS,
    SIDES,
    ConstructionProgram,
    Dist,
    Num,
    Param,
    PickHint,
    Ref,
    ScriptSource,
    Step,
    Word,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<num>[+-]?(?:\d+(?:\.\d*)?|\.\d+))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),=:])
    """,
    re.VERBOSE,
)

KEYWORDS = frozenset(
    {"param", "export", "pick", "optional", "dist", *OBJECT_KINDS, *PARAM_KINDS, *SIDES, *REF_HINTS, *BARE_HINTS}
    | set(OPS)
)


@dataclass(frozen=True)
class _Token:
    type: str
    text: str
    column: int


@dataclass
class _Symbol:
    kind: str
    optional: bool


class _Parser:
    def __init__(self, src: ScriptSource):
        self.src = src
        self.symbols: dict[str, _Symbol] = {}
        self.params: list[Param] = []
        self.steps: list[Step] = []
        self.exports: list[str] = []
        self.lineno = 0
        self.tokens: list[_Token] = []
        self.pos = 0
        self.line_len = 0

    # -- diagnostics

    def _err(self, cls, message: str, tok: _Token | None = None):
        if tok is None:
            tok = self._peek() or _Token("eol", "", self.line_len + 1)
        return cls(message, source=self.src.name, line=self.lineno, column=tok.column, token=tok.text)

    # -- token stream of the current line

    def _tokenize(self, text: str) -> list[_Token]:
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN_RE.match(text, i)
            if m is None:
                bad = _Token("error", text[i], i + 1)
                raise self._err(ScriptSyntaxError, "unexpected character", bad)
            kind = m.lastgroup
            if kind != "ws":
                tokens.append(_Token(kind, m.group(), i + 1))
            i = m.end()
        return tokens

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, what: str) -> _Token:
        tok = self._peek()
        if tok is None:
            raise self._err(ScriptSyntaxError, f"expected {what}, got end of line")
        self.pos += 1
        return tok

    def _expect_punct(self, ch: str) -> _Token:
        tok = self._next(f"'{ch}'")
        if tok.type != "punct" or tok.text != ch:
            raise self._err(ScriptSyntaxError, f"expected '{ch}'", tok)
        return tok

    def _expect_ident(self, what: str = "identifier") -> _Token:
        tok = self._next(what)
        if tok.type != "ident":
            raise self._err(ScriptSyntaxError, f"expected {what}", tok)
        return tok

    def _expect_name(self) -> _Token:
        tok = self._expect_ident("name")
        if tok.text in KEYWORDS:
            raise self._err(ScriptSyntaxError, "reserved word cannot be used as a name", tok)
        return tok

    def _expect_end(self) -> None:
        tok = self._peek()
        if tok is not None:
            raise self._err(ScriptSyntaxError, "unexpected token after statement", tok)

    def _at_punct(self, ch: str) -> bool:
        tok = self._peek()
        return tok is not None and tok.type == "punct" and tok.text == ch

    # -- statements

    def parse(self) -> ConstructionProgram:
        text = self.src.text.replace("\r\n", "\n").replace("\r", "\n")
        for self.lineno, raw in enumerate(text.split("\n"), start=1):
            code = raw.split("#", 1)[0]
            self.line_len = len(code.rstrip())
            self.tokens = self._tokenize(code)
            self.pos = 0
            if self.tokens:
                self._statement()
        return ConstructionProgram(
            params=tuple(self.params),
            steps=tuple(self.steps),
            exports=tuple(self.exports),
            name=self.src.name,
        )

    def _statement(self) -> None:
        head = self._expect_ident("statement keyword")
        if head.text == "param":
            self._param()
        elif head.text in OBJECT_KINDS:
            self._definition(head.text)
        elif head.text == "export":
            self._export()
        else:
            raise self._err(ScriptSyntaxError, "expected param, point, line, circle or export", head)
        self._expect_end()

    def _declare(self, tok: _Token, kind: str, optional: bool = False) -> None:
        if tok.text in self.symbols:
            raise self._err(DuplicateName, f"name {tok.text!r} is already defined", tok)
        self.symbols[tok.text] = _Symbol(kind, optional)

    def _param(self) -> None:
        name = self._expect_name()
        if name.text in self.symbols:
            raise self._err(DuplicateName, f"name {name.text!r} is already defined", name)
        self._expect_punct(":")
        kind = self._expect_ident("angle or length")
        if kind.text not in PARAM_KINDS:
            raise self._err(ScriptSyntaxError, "parameter kind must be angle or length", kind)
        self._declare(name, kind.text)
        self.params.append(Param(name.text, kind.text))

    def _export(self) -> None:
        while True:
            tok = self._expect_ident("exported name")
            if tok.text not in self.symbols or self.symbols[tok.text].kind in PARAM_KINDS:
                raise self._err(UndefinedIdentifier, f"cannot export undefined object {tok.text!r}", tok)
            if tok.text in self.exports:
                raise self._err(DuplicateName, f"{tok.text!r} is exported twice", tok)
            self.exports.append(tok.text)
            if not self._at_punct(","):
                return
            self._next("','")

    def _definition(self, kind: str) -> None:
        name = self._expect_name()
        if name.text in self.symbols:
            raise self._err(DuplicateName, f"name {name.text!r} is already defined", name)
        self._expect_punct("=")
        if self._at_punct("("):
            step_op, args, op_tok = self._coordinate()
        else:
            step_op, args, op_tok = self._call()
        pick = self._pick()
        optional = False
        tok = self._peek()
        if tok is not None and tok.type == "ident" and tok.text == "optional":
            self._next("optional")
            optional = True
        self._check_step(kind, name, step_op, args, op_tok, pick, optional)
        self._declare(name, kind, optional)
        self.steps.append(Step(
            kind=kind,
            name=name.text,
            op=step_op,
            args=tuple(a for a, _ in args),
            pick=pick[0] if pick else None,
            optional=optional,
            line=self.lineno,
        ))

    def _number(self) -> Num:
        tok = self._next("number")
        if tok.type != "num":
            raise self._err(ScriptSyntaxError, "expected a decimal number", tok)
        return Num(tok.text)

    def _coordinate(self):
        open_tok = self._expect_punct("(")
        x = self._number()
        self._expect_punct(",")
        y = self._number()
        self._expect_punct(")")
        return COORD, [(x, open_tok), (y, open_tok)], open_tok

    def _call(self):
        op_tok = self._expect_ident("operation name")
        if op_tok.text not in OPS:
            raise self._err(ScriptSyntaxError, "unknown operation", op_tok)
        self._expect_punct("(")
        args = []
        if not self._at_punct(")"):
            while True:
                args.append(self._arg())
                if not self._at_punct(","):
                    break
                self._next("','")
        self._expect_punct(")")
        return op_tok.text, args, op_tok

    def _arg(self):
        tok = self._next("argument")
        if tok.type == "num":
            return Num(tok.text), tok
        if tok.type != "ident":
            raise self._err(ScriptSyntaxError, "expected an argument", tok)
        if tok.text == "dist":
            self._expect_punct("(")
            p = self._expect_ident("point name")
            self._expect_punct(",")
            q = self._expect_ident("point name")
            self._expect_punct(")")
            for end in (p, q):
                self._require(end, (POINT,))
            return Dist(p.text, q.text), tok
        if tok.text in SIDES:
            return Word(tok.text), tok
        return Ref(tok.text), tok

    def _pick(self):
        tok = self._peek()
        if tok is None or tok.type != "ident" or tok.text != "pick":
            return None
        self._next("pick")
        hint = self._expect_ident("pick hint")
        if hint.text in BARE_HINTS:
            return PickHint(hint.text), hint
        if hint.text not in REF_HINTS:
            raise self._err(ScriptSyntaxError, "unknown pick hint", hint)
        self._expect_punct("(")
        ref = self._expect_ident("point name")
        self._expect_punct(")")
        self._require(ref, (POINT,))
        return PickHint(hint.text, ref.text), hint

    # -- static checks

    def _require(self, tok: _Token, kinds: tuple[str, ...]) -> _Symbol:
        sym = self.symbols.get(tok.text)
        if sym is None:
            raise self._err(UndefinedIdentifier, f"{tok.text!r} is used before it is defined", tok)
        if sym.kind not in kinds:
            expected = " or ".join(kinds)
            raise self._err(KindMismatch, f"{tok.text!r} is a {sym.kind}, expected {expected}", tok)
        return sym

    def _check_arg(self, slot: str, arg, tok: _Token) -> str | None:
        """Validate one argument; returns the object kind it refers to, if any."""
        if slot in (ARG_POINT, ARG_LINE, ARG_CIRCLE, ARG_CURVE):
            if not isinstance(arg, Ref):
                raise self._err(KindMismatch, f"expected a {slot} name", tok)
            kinds = (LINE, CIRCLE) if slot == ARG_CURVE else (slot,)
            return self._require(tok, kinds).kind
        if slot == ARG_ANGLE:
            if isinstance(arg, Num):
                return None
            if isinstance(arg, Ref):
                self._require(tok, (ANGLE,))
                return None
            raise self._err(KindMismatch, "expected an angle parameter or number", tok)
        if slot == ARG_RADIUS:
            if isinstance(arg, (Num, Dist)):
                return None
            if isinstance(arg, Ref):
                self._require(tok, (LENGTH,))
                return None
            raise self._err(KindMismatch, "expected dist(P, Q), a length parameter or a number", tok)
        if slot == ARG_SIDE:
            if not isinstance(arg, Word):
                raise self._err(KindMismatch, "expected ccw or cw", tok)
            return None
        raise AssertionError(f"unknown argument slot {slot}")

    def _check_step(self, kind, name, op, args, op_tok, pick, optional) -> None:
        if op == COORD:
            if kind != POINT:
                raise self._err(KindMismatch, f"a coordinate defines a point, not a {kind}", op_tok)
            two_valued = False
        else:
            spec = OPS[op]
            if len(args) != len(spec.args):
                raise self._err(ArityError, f"{op} takes {len(spec.args)} arguments, got {len(args)}", op_tok)
            kinds = [self._check_arg(slot, arg, tok) for slot, (arg, tok) in zip(spec.args, args)]
            if spec.result != kind:
                raise self._err(KindMismatch, f"{op} produces a {spec.result}, not a {kind}", op_tok)
            two_valued = spec.two_valued or (op == "intersect" and CIRCLE in kinds)
        if two_valued and pick is None:
            raise self._err(MissingPick, f"{op} has two candidate points; add a pick hint", op_tok)
        if not two_valued and pick is not None:
            raise self._err(UnexpectedPick, f"{op} has a single result; remove the pick hint", pick[1])
        if not optional:
            refs = Step(kind, name.text, op, tuple(a for a, _ in args), pick[0] if pick else None).references()
            for ref in refs:
                sym = self.symbols.get(ref)
                if sym is not None and sym.optional:
                    raise self._err(
                        OptionalDependency,
                        f"{name.text!r} needs optional {ref!r}; mark it optional too",
                        name,
                    )


def parse(src: ScriptSource) -> ConstructionProgram:
    """Parse a script into a program, or raise the first ScriptError found."""
    return _Parser(src).parse()


def load_script(path: Path | str) -> ConstructionProgram:
    """Read a UTF-8 .gcs file (LF or CRLF) and parse it."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = raw.rfind(b"\n", 0, e.start) + 1
        raise ScriptSyntaxError(
            "script is not valid UTF-8",
            source=path.name,
            line=raw.count(b"\n", 0, e.start) + 1,
            column=e.start - line_start + 1,
            token=f"\\x{raw[e.start]:02x}",
        ) from None
    return parse(ScriptSource(text=text, name=path.name))
