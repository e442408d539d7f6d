"""Syntax tree for analysis scripts, plus a source printer.

Nodes compare structurally; source positions are carried for error
messages but excluded from equality so a printed-and-reparsed tree equals
the original.
"""

from dataclasses import dataclass, field

# --- expressions ---


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class StrLit:
    value: str


@dataclass(frozen=True)
class ListLit:
    items: tuple


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class CurrentIndex:
    """The INDEX builtin: position of the sweep on the time axis."""


@dataclass(frozen=True)
class OffsetRef:
    signal: Ident
    offset: int


@dataclass(frozen=True)
class Unary:
    op: str  # '!' or '-'
    operand: object


@dataclass(frozen=True)
class Binary:
    op: str  # arithmetic, comparison, '&&', '||'
    left: object
    right: object


@dataclass(frozen=True)
class Subscript:
    base: object
    index: object


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


# --- statements ---


@dataclass(frozen=True)
class Assign:
    name: str
    value: object


@dataclass(frozen=True)
class ExprStmt:
    expr: object


@dataclass(frozen=True)
class If:
    cond: object
    then: tuple
    orelse: tuple  # empty when there is no else branch


# --- top level ---


@dataclass(frozen=True)
class Begin:
    pass


@dataclass(frozen=True)
class End:
    pass


@dataclass(frozen=True)
class Conditions:
    exprs: tuple  # comma list; all must hold, evaluated left to right


@dataclass(frozen=True)
class Statement:
    trigger: object  # Begin | End | Conditions
    body: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Program:
    statements: tuple


# --- printing ---

_ESCAPES = {"\n": "\\n", "\t": "\\t", "\r": "\\r", "\\": "\\\\", '"': '\\"'}


def _quote(text: str) -> str:
    return '"' + "".join(_ESCAPES.get(ch, ch) for ch in text) + '"'


def _expr(node) -> str:
    match node:
        case IntLit(value=v):
            return str(v)
        case StrLit(value=v):
            return _quote(v)
        case ListLit(items=items):
            return "[" + ", ".join(_expr(e) for e in items) + "]"
        case Ident(name=name):
            return name
        case CurrentIndex():
            return "INDEX"
        case OffsetRef(signal=sig, offset=k):
            return f"{sig.name}@{k}" if k >= 0 else f"{sig.name}@-{-k}"
        case Unary(op=op, operand=operand):
            return f"({op}{_expr(operand)})"
        case Binary(op=op, left=left, right=right):
            return f"({_expr(left)} {op} {_expr(right)})"
        case Subscript(base=base, index=index):
            return f"{_expr(base)}[{_expr(index)}]"
        case Call(func=func, args=args):
            return f"{func}(" + ", ".join(_expr(a) for a in args) + ")"
    raise TypeError(f"not an expression node: {node!r}")


def _stmt(node, depth: int) -> str:
    pad = "  " * depth
    match node:
        case Assign(name=name, value=value):
            return f"{pad}{name} = {_expr(value)};"
        case ExprStmt(expr=expr):
            return f"{pad}{_expr(expr)};"
        case If(cond=cond, then=then, orelse=orelse):
            text = f"{pad}if ({_expr(cond)}) {_block(then, depth)}"
            if orelse:
                text += f" else {_block(orelse, depth)}"
            return text + ";"
    raise TypeError(f"not a statement node: {node!r}")


def _block(body: tuple, depth: int) -> str:
    if not body:
        return "{ }"
    inner = "\n".join(_stmt(s, depth + 1) for s in body)
    return "{\n" + inner + "\n" + "  " * depth + "}"


def to_source(program: Program) -> str:
    chunks = []
    for stmt in program.statements:
        match stmt.trigger:
            case Begin():
                head = "BEGIN"
            case End():
                head = "END"
            case Conditions(exprs=exprs):
                head = ", ".join(_expr(e) for e in exprs)
            case other:
                raise TypeError(f"not a trigger node: {other!r}")
        chunks.append(f"{head}: {_block(stmt.body, 0)}")
    return "\n\n".join(chunks) + "\n"
