"""Value change dump parser.

Covers the plain-text subset that simulator frontends like Verilator and
Icarus actually emit: $timescale/$scope/$var/$upscope/$enddefinitions
headers, module scopes, wire/reg variables, `#` timestamps, scalar and
binary vector changes, and transparent $dumpvars/$comment blocks. Real
(`r`) changes and non-module scopes are rejected rather than guessed at.

Every `#` directive opens a new index on the time axis, even if no change
follows it; repeated changes for one signal at the same index keep the last
one. Vector values shorter than the declared width are left-extended with
0 for leading 0/1 and with x/z for leading x/z, per the dump format's
extension rule.
"""

from dataclasses import dataclass, field
from typing import IO

from .errors import (
    BadTimestampError,
    MalformedHeaderError,
    UnknownIdCodeError,
    UnsupportedVcdFeatureError,
    VcdError,
    WidthMismatchError,
)
from .value import SCALARS, Value
from .waveform import SignalSeries, Waveform

_TIME_UNITS = ("fs", "ps", "ns", "us", "ms", "s")
_VAR_TYPES = ("wire", "reg")
_SKIP_DIRECTIVES = ("$comment", "$date", "$version")


@dataclass
class VarDecl:
    id_code: str
    width: int
    name: str  # full hierarchical name, dot-joined


@dataclass
class ScopeNode:
    name: str
    children: list["ScopeNode"] = field(default_factory=list)
    var_names: list[str] = field(default_factory=list)


@dataclass
class VcdHeader:
    timescale: tuple[int, str] | None
    var_decls: list[VarDecl]
    root: ScopeNode  # synthetic root; top-level scopes are its children


class _Tokens:
    """Whitespace-separated tokens pulled line by line, tracking the line
    number for error messages. Header directives may span lines."""

    def __init__(self, stream: IO[str]):
        self._stream = stream
        self._buf: list[str] = []
        self._pos = 0
        self.line = 0

    def next(self) -> str | None:
        while self._pos >= len(self._buf):
            raw = self._stream.readline()
            if raw == "":
                return None
            self.line += 1
            self._buf = raw.split()
            self._pos = 0
        tok = self._buf[self._pos]
        self._pos += 1
        return tok

    def leftover(self) -> list[str]:
        rest = self._buf[self._pos :]
        self._pos = len(self._buf)
        return rest


def _parse_timescale(parts: list[str], line: int) -> tuple[int, str]:
    text = "".join(parts)
    magnitude = text.rstrip("".join(_TIME_UNITS))
    unit = text[len(magnitude) :]
    if unit not in _TIME_UNITS or not magnitude.isdigit():
        raise MalformedHeaderError(f"invalid $timescale {' '.join(parts)!r}", line)
    return int(magnitude), unit


class _Parser:
    def __init__(self, stream: IO[str]):
        self.tokens = _Tokens(stream)
        self.timescale: tuple[int, str] | None = None
        self.var_decls: list[VarDecl] = []
        self.root = ScopeNode("")
        self.scope_stack: list[ScopeNode] = [self.root]
        self.scope_path: list[str] = []
        # id code -> list of signal names it drives (aliasing fans out)
        self.id_names: dict[str, list[str]] = {}
        self.id_width: dict[str, int] = {}
        self.names: set[str] = set()

    # --- header ---

    def _need(self, what: str) -> str:
        tok = self.tokens.next()
        if tok is None:
            raise MalformedHeaderError(f"unexpected end of file in {what}", self.tokens.line)
        return tok

    def _until_end(self, what: str) -> list[str]:
        parts = []
        while True:
            tok = self._need(what)
            if tok == "$end":
                return parts
            parts.append(tok)

    def parse_header(self) -> None:
        while True:
            tok = self.tokens.next()
            if tok is None:
                raise MalformedHeaderError("missing $enddefinitions", self.tokens.line)
            if tok == "$enddefinitions":
                if self._until_end("$enddefinitions"):
                    raise MalformedHeaderError(
                        "unexpected tokens in $enddefinitions", self.tokens.line
                    )
                if len(self.scope_stack) != 1:
                    raise MalformedHeaderError("unclosed $scope", self.tokens.line)
                return
            if tok == "$timescale":
                self.timescale = _parse_timescale(
                    self._until_end("$timescale"), self.tokens.line
                )
            elif tok == "$scope":
                self._parse_scope()
            elif tok == "$upscope":
                if self._until_end("$upscope"):
                    raise MalformedHeaderError("unexpected tokens in $upscope", self.tokens.line)
                if len(self.scope_stack) == 1:
                    raise MalformedHeaderError("$upscope without matching $scope", self.tokens.line)
                self.scope_stack.pop()
                self.scope_path.pop()
            elif tok == "$var":
                self._parse_var()
            elif tok in _SKIP_DIRECTIVES:
                self._until_end(tok)
            elif tok.startswith("$"):
                raise UnsupportedVcdFeatureError(
                    f"unsupported directive {tok!r} in header", self.tokens.line
                )
            else:
                raise MalformedHeaderError(
                    f"unexpected token {tok!r} in header", self.tokens.line
                )

    def _parse_scope(self) -> None:
        parts = self._until_end("$scope")
        if len(parts) != 2:
            raise MalformedHeaderError(f"malformed $scope {' '.join(parts)!r}", self.tokens.line)
        scope_type, name = parts
        if scope_type != "module":
            raise UnsupportedVcdFeatureError(
                f"unsupported scope type {scope_type!r}", self.tokens.line
            )
        node = ScopeNode(name)
        self.scope_stack[-1].children.append(node)
        self.scope_stack.append(node)
        self.scope_path.append(name)

    def _parse_var(self) -> None:
        parts = self._until_end("$var")
        # $var <type> <width> <id> <name> [<range>] $end
        if len(parts) not in (4, 5):
            raise MalformedHeaderError(f"malformed $var {' '.join(parts)!r}", self.tokens.line)
        var_type, width_text, id_code, short_name = parts[:4]
        if var_type not in _VAR_TYPES:
            raise UnsupportedVcdFeatureError(
                f"unsupported variable type {var_type!r}", self.tokens.line
            )
        if not width_text.isdigit() or int(width_text) < 1:
            raise MalformedHeaderError(f"invalid $var width {width_text!r}", self.tokens.line)
        width = int(width_text)
        if len(parts) == 5 and not (parts[4].startswith("[") and parts[4].endswith("]")):
            raise MalformedHeaderError(
                f"unexpected trailing token {parts[4]!r} in $var", self.tokens.line
            )
        name = ".".join(self.scope_path + [short_name])
        if name in self.names:
            raise MalformedHeaderError(f"duplicate signal name {name!r}", self.tokens.line)
        self.names.add(name)
        known_width = self.id_width.get(id_code)
        if known_width is None:
            self.id_width[id_code] = width
            self.id_names[id_code] = [name]
        elif known_width != width:
            raise MalformedHeaderError(
                f"id code {id_code!r} re-declared with width {width}, was {known_width}",
                self.tokens.line,
            )
        else:
            self.id_names[id_code].append(name)
        self.var_decls.append(VarDecl(id_code, width, name))
        self.scope_stack[-1].var_names.append(name)

    # --- change region ---

    def parse_changes(self) -> Waveform:
        timestamps: list[int] = []
        # per id code: (indexes, values) change lists
        id_series: dict[str, tuple[list[int], list[Value]]] = {
            ic: ([], []) for ic in self.id_names
        }
        # changes seen before the first '#' take effect at index 0
        pending: dict[str, Value] = {}
        vector_bits: str | None = None
        skipping = False  # inside a $comment-style block
        cur = -1  # current index, -1 before the first '#'
        id_width = self.id_width

        def apply(id_code: str, value: Value, line: int) -> None:
            if id_code not in id_series:
                raise UnknownIdCodeError(f"undeclared id code {id_code!r}", line)
            if cur < 0:
                pending[id_code] = value
                return
            indexes, values = id_series[id_code]
            if indexes and indexes[-1] == cur:
                values[-1] = value  # same-index rewrite: last one wins
            else:
                indexes.append(cur)
                values.append(value)

        def make_value(bits: str, id_code: str, line: int) -> Value:
            width = id_width.get(id_code)
            if width is None:
                raise UnknownIdCodeError(f"undeclared id code {id_code!r}", line)
            if len(bits) > width:
                raise WidthMismatchError(
                    f"{len(bits)}-bit value for {width}-bit id code {id_code!r}", line
                )
            if len(bits) < width:
                lead = bits[0]
                fill = "0" if lead in "01" else lead
                bits = fill * (width - len(bits)) + bits
            if width == 1:
                return SCALARS[bits]
            return Value(bits)

        tokens = self.tokens
        stream = tokens._stream
        line = tokens.line
        queue = tokens.leftover()
        while True:
            for tok in queue:
                if skipping:
                    if tok == "$end":
                        skipping = False
                    continue
                if vector_bits is not None:
                    apply(tok, make_value(vector_bits, tok, line), line)
                    vector_bits = None
                    continue
                c = tok[0]
                if c == "#":
                    text = tok[1:]
                    try:
                        t = int(text)
                    except ValueError:
                        raise BadTimestampError(f"invalid timestamp {tok!r}", line) from None
                    if t < 0 or (timestamps and t <= timestamps[-1]):
                        raise BadTimestampError(
                            f"timestamp #{t} does not increase (previous "
                            f"{'#%d' % timestamps[-1] if timestamps else 'none'})",
                            line,
                        )
                    timestamps.append(t)
                    cur += 1
                    if cur == 0:
                        for id_code, value in pending.items():
                            apply(id_code, value, line)
                        pending.clear()
                elif c in "01xzXZ" and len(tok) > 1:
                    apply(tok[1:], make_value(c.lower(), tok[1:], line), line)
                elif c in "bB":
                    bits = tok[1:].lower()
                    if not bits or not frozenset("01xz").issuperset(bits):
                        raise VcdError(f"invalid vector value {tok!r}", line)
                    vector_bits = bits
                elif c in "rR":
                    raise UnsupportedVcdFeatureError(
                        f"real-number change {tok!r} is not supported", line
                    )
                elif tok == "$dumpvars" or tok == "$end":
                    pass  # initial-value block is transparent
                elif tok in _SKIP_DIRECTIVES:
                    skipping = True
                elif c == "$":
                    raise UnsupportedVcdFeatureError(
                        f"unsupported directive {tok!r} in change region", line
                    )
                else:
                    raise VcdError(f"unrecognized token {tok!r} in change region", line)
            raw = stream.readline()
            if raw == "":
                break
            line += 1
            queue = raw.split()
        if vector_bits is not None:
            raise VcdError("vector value at end of file has no id code", line)
        if skipping:
            raise VcdError("unterminated directive block at end of file", line)

        signals: dict[str, SignalSeries] = {}
        for id_code, names in self.id_names.items():
            indexes, values = id_series[id_code]
            width = id_width[id_code]
            # names sharing an id code share the (never again mutated) lists
            series = SignalSeries(width, indexes, values)
            for name in names:
                signals[name] = series
        return Waveform(timestamps, signals, self.timescale)


def parse_vcd(stream: IO[str]) -> Waveform:
    """Parse a dump from a text stream into a Waveform.

    The returned waveform carries the parsed header on a `header`
    attribute (a VcdHeader) for callers that need declarations or scope
    structure."""
    parser = _Parser(stream)
    parser.parse_header()
    waveform = parser.parse_changes()
    waveform.header = VcdHeader(parser.timescale, parser.var_decls, parser.root)
    return waveform


def parse_vcd_file(path) -> Waveform:
    with open(path, "r", encoding="ascii", errors="replace") as f:
        return parse_vcd(f)
