"""Tree-walking interpreter for analysis scripts.

Execution model: BEGIN bodies run once, then every non-BEGIN/END
statement is evaluated at every index of the waveform in source order
(conditions first, body only when they all hold), then END bodies run
once. Variables are global and dynamically typed; `args` is pre-bound to
the command-line argument list.

Value domain: Python ints, strings, lists, four-state logic Values, and
two absence markers. UNBOUND is what reading a never-assigned variable
yields inside a condition (falsy, so "has this been set yet" patterns
work); reading one in an action body raises instead, because there it is
almost certainly a typo. OUT_OF_RANGE is what an `@` offset yields when
it lands outside the trace; it is falsy everywhere, so window conditions
degrade gracefully at the trace edges. Comparisons involving either
marker yield UNBOUND rather than raising; arithmetic on them raises.

Logic values convert to ints only when fully defined; x/z bits raise.
Truthiness of a logic value is "fully defined and non-zero". `+` on a
list appends the right operand in place and yields the list; `/` is
integer division truncating toward zero; `average` rounds half up.

Expression dispatch is a dict keyed on the node class rather than
match/case: the sweep visits every statement at every index, so this is
the hottest loop in the package.
"""

import sys
from typing import IO, Sequence

from . import ast
from .errors import (
    DivisionByZeroError,
    EmptyListError,
    FormatArityMismatchError,
    FormatError,
    FormatTypeMismatchError,
    RedefinedAliasError,
    TypeMismatchError,
    UnknownFunctionError,
    UnknownModuleError,
    UnknownNameError,
    UnknownSignalError,
    WawkRuntimeError,
)
from .riscv import decode as _decode_word
from .value import Value
from .waveform import SignalSeries, Waveform


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


UNBOUND = _Marker("unbound")
OUT_OF_RANGE = _Marker("out-of-range")


def _extern_decode(args: list) -> str:
    if len(args) != 1:
        raise TypeMismatchError(f"decode takes 1 argument, got {len(args)}")
    word = args[0]
    if isinstance(word, Value):
        word = word.to_int()
    if not isinstance(word, int):
        raise TypeMismatchError(f"decode needs an instruction word, got {_type_name(word)}")
    return _decode_word(word)


def default_native_modules() -> dict[str, dict]:
    """Native function modules scripts can import; keys are module names,
    values map function names to callables taking the evaluated argument
    list."""
    return {"extern": {"decode": _extern_decode}}


class Environment:
    """All mutable state of one script run. Returned by execute() so
    callers can inspect final variable values."""

    def __init__(
        self,
        waveform: Waveform,
        args: Sequence[str] = (),
        out: IO[str] | None = None,
        modules: dict[str, dict] | None = None,
    ):
        self.waveform = waveform
        self.out = out if out is not None else sys.stdout
        self.variables: dict[str, object] = {"args": list(args)}
        self.aliases: dict[str, str] = {}
        self.modules = modules if modules is not None else default_native_modules()
        self.imported: set[str] = set()
        self.index: int | None = None


def _type_name(v: object) -> str:
    if isinstance(v, bool):
        return "bool"
    if isinstance(v, int):
        return "int"
    if isinstance(v, str):
        return "string"
    if isinstance(v, list):
        return "list"
    if isinstance(v, Value):
        return "logic"
    return repr(v)


def _truthy(v: object) -> bool:
    if isinstance(v, int):
        return v != 0
    if isinstance(v, Value):
        return not v.has_xz and int(v.bits, 2) != 0
    if isinstance(v, (str, list)):
        return bool(v)
    if v is UNBOUND or v is OUT_OF_RANGE:
        return False
    raise TypeMismatchError(f"no truth value for {_type_name(v)}")


def _as_int(v: object, op: str) -> int:
    if isinstance(v, bool):
        raise TypeMismatchError(f"operand of {op!r} must be an integer")
    if isinstance(v, int):
        return v
    if isinstance(v, Value):
        return v.to_int()
    if v is UNBOUND:
        raise TypeMismatchError(f"operand of {op!r} is an unbound variable")
    if v is OUT_OF_RANGE:
        raise TypeMismatchError(f"operand of {op!r} is an out-of-range signal sample")
    raise TypeMismatchError(f"operand of {op!r} must be an integer, got {_type_name(v)}")


def _need_list_arg(name: str, args: list) -> list:
    if len(args) != 1:
        raise TypeMismatchError(f"{name} takes 1 argument, got {len(args)}")
    lst = args[0]
    if not isinstance(lst, list):
        raise TypeMismatchError(f"{name} needs a list, got {_type_name(lst)}")
    return lst


def _int_list(name: str, lst: list) -> list[int]:
    out = []
    for item in lst:
        if isinstance(item, bool) or not isinstance(item, int):
            raise TypeMismatchError(
                f"{name} needs a list of integers, found {_type_name(item)}"
            )
        out.append(item)
    return out


def _builtin_length(args: list) -> int:
    return len(_need_list_arg("length", args))


def _builtin_min(args: list) -> int:
    lst = _need_list_arg("min", args)
    if not lst:
        raise EmptyListError("min of an empty list")
    return min(_int_list("min", lst))


def _builtin_max(args: list) -> int:
    lst = _need_list_arg("max", args)
    if not lst:
        raise EmptyListError("max of an empty list")
    return max(_int_list("max", lst))


def _builtin_average(args: list) -> int:
    lst = _need_list_arg("average", args)
    if not lst:
        raise EmptyListError("average of an empty list")
    items = _int_list("average", lst)
    # integer mean, exact halves rounding up
    return (2 * sum(items) + len(items)) // (2 * len(items))


def _format(fmt: str, values: list) -> str:
    out: list[str] = []
    vi = 0
    i = 0
    n = len(fmt)
    while i < n:
        ch = fmt[i]
        if ch != "%":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise FormatError("format string ends with a lone '%'")
        spec = fmt[i + 1]
        i += 2
        if spec == "%":
            out.append("%")
            continue
        if vi >= len(values):
            raise FormatArityMismatchError(
                f"format string needs more than {len(values)} value(s)"
            )
        v = values[vi]
        vi += 1
        if spec == "d":
            if isinstance(v, Value):
                v = v.to_int()
            if isinstance(v, bool) or not isinstance(v, int):
                raise FormatTypeMismatchError(f"%d needs an integer, got {_type_name(v)}")
            out.append(str(v))
        elif spec == "s":
            if not isinstance(v, str):
                raise FormatTypeMismatchError(f"%s needs a string, got {_type_name(v)}")
            out.append(v)
        elif spec == "b":
            if isinstance(v, Value):
                out.append(v.bits)
            elif isinstance(v, bool) or not isinstance(v, int):
                raise FormatTypeMismatchError(f"%b needs a logic value, got {_type_name(v)}")
            elif v < 0:
                raise FormatTypeMismatchError("%b needs a non-negative integer")
            else:
                out.append(format(v, "b"))
        else:
            raise FormatError(f"unknown format directive '%{spec}'")
    if vi != len(values):
        raise FormatArityMismatchError(
            f"format string consumed {vi} of {len(values)} value(s)"
        )
    return "".join(out)


_BUILTINS = {
    "min": _builtin_min,
    "max": _builtin_max,
    "average": _builtin_average,
    "length": _builtin_length,
}

_CMP = {
    "==": lambda a, b: int(a == b),
    "!=": lambda a, b: int(a != b),
    "<": lambda a, b: int(a < b),
    "<=": lambda a, b: int(a <= b),
    ">": lambda a, b: int(a > b),
    ">=": lambda a, b: int(a >= b),
}


class _Run:
    def __init__(self, env: Environment):
        self.env = env
        self.wave = env.waveform
        self.index: int | None = None  # mirrors env.index, cheaper to reach
        self.series_cache: dict[str, SignalSeries] = {}

    # --- name and signal resolution ---

    def signal_series(self, name: str) -> SignalSeries:
        series = self.series_cache.get(name)
        if series is None:
            target = self.env.aliases.get(name, name)
            series = self.wave.series(target)  # raises UnknownSignalError
            self.series_cache[name] = series
        return series

    def read_signal(self, name: str) -> Value:
        if self.index is None:
            raise WawkRuntimeError(
                f"signal {name!r} can only be read during the index sweep"
            )
        return self.signal_series(name).value_at(self.index)

    def resolve(self, name: str, cond: bool) -> object:
        env = self.env
        if name in env.variables:
            return env.variables[name]
        if name in env.aliases or self.wave.has_signal(name):
            return self.read_signal(name)
        if name in env.modules:
            raise TypeMismatchError(f"{name!r} is a native module, not a value")
        if "." in name:
            raise UnknownSignalError(f"unknown signal {name!r}")
        if cond:
            return UNBOUND
        raise UnknownNameError(f"unbound variable {name!r}")

    # --- expression evaluation ---
    # cond=True marks condition context, where unbound variables read as
    # the falsy UNBOUND instead of raising.

    def eval(self, node, cond: bool) -> object:
        return _EVAL[node.__class__](self, node, cond)

    def _e_int(self, node: ast.IntLit, cond: bool) -> int:
        return node.value

    def _e_str(self, node: ast.StrLit, cond: bool) -> str:
        return node.value

    def _e_list(self, node: ast.ListLit, cond: bool) -> list:
        return [self.eval(e, cond) for e in node.items]

    def _e_ident(self, node: ast.Ident, cond: bool) -> object:
        return self.resolve(node.name, cond)

    def _e_index(self, node: ast.CurrentIndex, cond: bool) -> int:
        if self.index is None:
            raise WawkRuntimeError("INDEX is only defined during the index sweep")
        return self.index

    def _e_offset(self, node: ast.OffsetRef, cond: bool) -> object:
        if self.index is None:
            raise WawkRuntimeError(
                f"signal {node.signal.name!r} can only be read during the index sweep"
            )
        series = self.signal_series(node.signal.name)
        target = self.index + node.offset
        if 0 <= target < self.wave.index_count:
            return series.value_at(target)
        return OUT_OF_RANGE

    def _e_unary(self, node: ast.Unary, cond: bool) -> int:
        if node.op == "!":
            return int(not _truthy(self.eval(node.operand, cond)))
        return -_as_int(self.eval(node.operand, cond), "-")

    def _e_binary(self, node: ast.Binary, cond: bool) -> object:
        op = node.op
        if op == "&&":
            if not _truthy(self.eval(node.left, cond)):
                return 0
            return int(_truthy(self.eval(node.right, cond)))
        if op == "||":
            if _truthy(self.eval(node.left, cond)):
                return 1
            return int(_truthy(self.eval(node.right, cond)))
        left = self.eval(node.left, cond)
        right = self.eval(node.right, cond)
        cmp = _CMP.get(op)
        if cmp is not None:
            return self._compare(op, cmp, left, right)
        if op == "+" and isinstance(left, list):
            if right is UNBOUND or right is OUT_OF_RANGE:
                raise TypeMismatchError("cannot append an absent value to a list")
            left.append(right)
            return left
        lhs = _as_int(left, op)
        rhs = _as_int(right, op)
        if op == "+":
            return lhs + rhs
        if op == "-":
            return lhs - rhs
        if op == "*":
            return lhs * rhs
        if rhs == 0:
            raise DivisionByZeroError(f"{lhs} / 0")
        q = abs(lhs) // abs(rhs)
        return -q if (lhs < 0) != (rhs < 0) else q

    def _compare(self, op: str, cmp, left: object, right: object) -> object:
        if left is UNBOUND or left is OUT_OF_RANGE or right is UNBOUND or right is OUT_OF_RANGE:
            return UNBOUND  # falsy: comparisons degrade, they do not raise
        if isinstance(left, Value):
            left = left.to_int()
        if isinstance(right, Value):
            right = right.to_int()
        if isinstance(left, str) != isinstance(right, str):
            raise TypeMismatchError(
                f"cannot compare {_type_name(left)} with {_type_name(right)} using {op!r}"
            )
        if not isinstance(left, (int, str)) or isinstance(left, bool):
            raise TypeMismatchError(f"cannot compare {_type_name(left)} values with {op!r}")
        return cmp(left, right)

    def _e_subscript(self, node: ast.Subscript, cond: bool) -> object:
        base = self.eval(node.base, cond)
        index = self.eval(node.index, cond)
        if not isinstance(base, list):
            raise TypeMismatchError(f"cannot subscript {_type_name(base)}")
        if isinstance(index, Value):
            index = index.to_int()
        if isinstance(index, bool) or not isinstance(index, int):
            raise TypeMismatchError(f"list index must be an integer, got {_type_name(index)}")
        if not 0 <= index < len(base):
            raise WawkRuntimeError(f"list index {index} out of range for length {len(base)}")
        return base[index]

    # --- calls ---

    def _e_call(self, node: ast.Call, cond: bool) -> object:
        func = node.func
        arg_nodes = node.args
        if func == "alias":
            return self._form_alias(arg_nodes)
        if func == "import":
            return self._form_import(arg_nodes)
        if func == "call":
            return self._form_call(arg_nodes, cond)
        if func == "printf":
            args = [self.eval(a, cond) for a in arg_nodes]
            if not args or not isinstance(args[0], str):
                raise TypeMismatchError("printf needs a format string first")
            self.env.out.write(_format(args[0], args[1:]))
            return UNBOUND
        builtin = _BUILTINS.get(func)
        if builtin is None:
            raise UnknownFunctionError(f"unknown function {func!r}")
        return builtin([self.eval(a, cond) for a in arg_nodes])

    def _form_alias(self, arg_nodes: tuple) -> object:
        if len(arg_nodes) != 2 or not all(isinstance(a, ast.Ident) for a in arg_nodes):
            raise TypeMismatchError("alias takes two names: alias(short, target)")
        short, target = (a.name for a in arg_nodes)
        if "." in short:
            raise TypeMismatchError(f"alias name {short!r} must be a plain identifier")
        if short in self.env.aliases:
            raise RedefinedAliasError(f"alias {short!r} is already defined")
        resolved = self.env.aliases.get(target, target)
        if not self.wave.has_signal(resolved):
            raise UnknownSignalError(f"unknown signal {resolved!r}")
        self.env.aliases[short] = resolved
        return UNBOUND

    def _form_import(self, arg_nodes: tuple) -> object:
        if len(arg_nodes) != 1 or not isinstance(arg_nodes[0], ast.Ident):
            raise TypeMismatchError("import takes one module name")
        name = arg_nodes[0].name
        if name not in self.env.modules:
            raise UnknownModuleError(f"unknown native module {name!r}")
        self.env.imported.add(name)
        return UNBOUND

    def _form_call(self, arg_nodes: tuple, cond: bool) -> object:
        if not arg_nodes or not isinstance(arg_nodes[0], ast.Ident):
            raise TypeMismatchError("call needs a module.function name first")
        full = arg_nodes[0].name
        module, _, func = full.rpartition(".")
        if not module:
            raise TypeMismatchError(f"call target {full!r} must be module.function")
        if module not in self.env.imported:
            raise UnknownModuleError(f"module {module!r} has not been imported")
        fn = self.env.modules[module].get(func)
        if fn is None:
            raise UnknownFunctionError(f"module {module!r} has no function {func!r}")
        return fn([self.eval(a, cond) for a in arg_nodes[1:]])

    # --- statements ---

    def exec_body(self, body: tuple) -> None:
        variables = self.env.variables
        for stmt in body:
            cls = stmt.__class__
            if cls is ast.Assign:
                variables[stmt.name] = self.eval(stmt.value, False)
            elif cls is ast.ExprStmt:
                self.eval(stmt.expr, False)
            elif cls is ast.If:
                if _truthy(self.eval(stmt.cond, True)):
                    self.exec_body(stmt.then)
                elif stmt.orelse:
                    self.exec_body(stmt.orelse)
            else:
                raise TypeError(f"cannot execute {stmt!r}")


_EVAL = {
    ast.IntLit: _Run._e_int,
    ast.StrLit: _Run._e_str,
    ast.ListLit: _Run._e_list,
    ast.Ident: _Run._e_ident,
    ast.CurrentIndex: _Run._e_index,
    ast.OffsetRef: _Run._e_offset,
    ast.Unary: _Run._e_unary,
    ast.Binary: _Run._e_binary,
    ast.Subscript: _Run._e_subscript,
    ast.Call: _Run._e_call,
}


def execute(
    program: ast.Program,
    waveform: Waveform,
    args: Sequence[str] = (),
    out: IO[str] | None = None,
    modules: dict[str, dict] | None = None,
) -> Environment:
    """Run a parsed script over a waveform; returns the final Environment."""
    env = Environment(waveform, args, out, modules)
    run = _Run(env)
    numbered = list(enumerate(program.statements, start=1))

    def run_block(ordinal: int, where: str, body: tuple) -> None:
        try:
            run.exec_body(body)
        except WawkRuntimeError as err:
            if err.context is None:
                err.context = f"statement {ordinal}{where}"
            raise

    for ordinal, stmt in numbered:
        if isinstance(stmt.trigger, ast.Begin):
            run_block(ordinal, " (BEGIN)", stmt.body)

    sweep = [
        (ordinal, stmt.trigger.exprs, stmt.body)
        for ordinal, stmt in numbered
        if isinstance(stmt.trigger, ast.Conditions)
    ]
    if sweep:
        evaluate = run.eval
        truthy = _truthy
        exec_body = run.exec_body
        for index in range(env.waveform.index_count):
            run.index = index
            env.index = index
            for ordinal, conditions, body in sweep:
                try:
                    for condition in conditions:
                        if not truthy(evaluate(condition, True)):
                            break
                    else:
                        exec_body(body)
                except WawkRuntimeError as err:
                    if err.context is None:
                        err.context = f"statement {ordinal} at index {index}"
                    raise
        run.index = None
        env.index = None

    for ordinal, stmt in numbered:
        if isinstance(stmt.trigger, ast.End):
            run_block(ordinal, " (END)", stmt.body)
    return env


def run_source(
    source: str,
    waveform: Waveform,
    args: Sequence[str] = (),
    out: IO[str] | None = None,
    modules: dict[str, dict] | None = None,
) -> Environment:
    """Parse and execute script source in one step."""
    from .parser import parse_source

    return execute(parse_source(source), waveform, args, out, modules)
