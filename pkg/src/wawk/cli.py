"""Command-line front end.

    wawk run <script> <trace.vcd> [args...]   analyze a dump
    wawk gen table1 <out.vcd>                 canned benchmark trace
    wawk gen spec <spec.txt> <out.vcd>        trace from a spec file
    wawk decode <hexword>                     one instruction word

Exit codes: 0 success, 1 script runtime error, 2 unusable input (bad
usage, unreadable file, malformed VCD, script syntax error, bad spec).
"""

import argparse
import sys
from importlib import resources

from .errors import ParseFailure, RunFailure, WawkSyntaxError
from .interp import execute
from .parser import parse_source
from .riscv import MNEMONICS, decode
from .tracegen import generate, parse_spec_file, table1_spec
from .vcd import parse_vcd, parse_vcd_file


def bundled_script(name: str) -> str:
    """Source text of a script shipped inside the package (see `@name`
    on the run subcommand)."""
    path = resources.files("wawk").joinpath("scripts", f"{name}.wawk")
    if not path.is_file():
        raise FileNotFoundError(f"no bundled script named {name!r}")
    return path.read_text(encoding="utf-8")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wawk",
        description="pattern-action analysis over VCD waveforms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an analysis script over a dump")
    run.add_argument("script", help="script path, or @name for a bundled script (@cpi)")
    run.add_argument("vcd", help="VCD file, or - for stdin")
    run.add_argument("script_args", nargs="*", help="arguments exposed to the script as args")
    run.add_argument(
        "--all",
        action="store_true",
        help="run once per RV32I mnemonic, passing it as the single argument",
    )

    gen = sub.add_parser("gen", help="generate a synthetic core trace")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    for name, needs_spec in (("table1", False), ("spec", True)):
        g = gen_sub.add_parser(
            name,
            help="canned benchmark mix" if name == "table1" else "mix from a spec file",
        )
        if needs_spec:
            g.add_argument("specfile", help="lines of '<hex word> <cycles>'")
        g.add_argument("out", help="output VCD path, or - for stdout")
        g.add_argument("--half-period", type=int, default=1, help="clock half period in ns")
        g.add_argument("--dummy-signals", type=int, default=0, help="extra toggling 1-bit signals")

    dec = sub.add_parser("decode", help="decode one RV32I instruction word")
    dec.add_argument("word", help="instruction word in hex, e.g. 0x00500093")
    return parser


def _fail(message: str, code: int) -> int:
    print(f"wawk: {message}", file=sys.stderr)
    return code


def _cmd_run(opts) -> int:
    script_name = opts.script
    if opts.script.startswith("@"):
        try:
            source = bundled_script(opts.script[1:])
        except FileNotFoundError:
            return _fail(f"no bundled script named {opts.script!r}", 2)
    elif opts.script == "-":
        if opts.vcd == "-":
            return _fail("only one of the script and the VCD can come from stdin", 2)
        script_name = "<stdin>"
        source = sys.stdin.read()
    else:
        try:
            with open(opts.script, "r", encoding="utf-8") as f:
                source = f.read()
        except OSError as err:
            return _fail(f"cannot read script: {err}", 2)
    try:
        program = parse_source(source)
    except WawkSyntaxError as err:
        return _fail(f"{script_name}:{err}", 2)

    try:
        if opts.vcd == "-":
            waveform = parse_vcd(sys.stdin)
        else:
            waveform = parse_vcd_file(opts.vcd)
    except OSError as err:
        return _fail(f"cannot read VCD: {err}", 2)
    except ParseFailure as err:
        return _fail(f"{opts.vcd}: {err}", 2)

    if opts.all and opts.script_args:
        return _fail("--all and explicit script arguments are mutually exclusive", 2)
    runs = [[m] for m in MNEMONICS] if opts.all else [list(opts.script_args)]
    try:
        for args in runs:
            execute(program, waveform, args=args, out=sys.stdout)
    except RunFailure as err:
        return _fail(str(err), 1)
    return 0


def _cmd_gen(opts) -> int:
    try:
        if opts.generator == "table1":
            spec = table1_spec(opts.half_period, opts.dummy_signals)
        else:
            try:
                if opts.specfile == "-":
                    spec = parse_spec_file(sys.stdin.read())
                else:
                    with open(opts.specfile, "r", encoding="utf-8") as f:
                        spec = parse_spec_file(f.read())
            except OSError as err:
                return _fail(f"cannot read spec: {err}", 2)
            spec.clock_half_period = opts.half_period
            spec.dummy_signals = opts.dummy_signals
        text, _ = generate(spec)
    except ParseFailure as err:
        return _fail(str(err), 2)
    try:
        if opts.out == "-":
            sys.stdout.write(text)
        else:
            with open(opts.out, "w", encoding="ascii") as f:
                f.write(text)
    except OSError as err:
        return _fail(f"cannot write output: {err}", 2)
    return 0


def _cmd_decode(opts) -> int:
    try:
        word = int(opts.word, 16)
    except ValueError:
        return _fail(f"{opts.word!r} is not a hexadecimal instruction word", 2)
    if not 0 <= word <= 0xFFFFFFFF:
        return _fail(f"{opts.word!r} does not fit in 32 bits", 2)
    print(decode(word))
    return 0


def main(argv=None) -> int:
    try:
        opts = _build_parser().parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    if opts.command == "run":
        return _cmd_run(opts)
    if opts.command == "gen":
        return _cmd_gen(opts)
    return _cmd_decode(opts)


if __name__ == "__main__":
    sys.exit(main())
