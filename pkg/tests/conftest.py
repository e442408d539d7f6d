import io

import pytest

from wawk.interp import execute
from wawk.parser import parse_source
from wawk.value import Value
from wawk.vcd import parse_vcd
from wawk.waveform import SignalSeries, Waveform


def make_waveform(count: int, signals: dict) -> Waveform:
    """Build a Waveform directly, bypassing the VCD layer.

    `signals` maps name -> (width, [(index, bits), ...]) with indexes
    ascending."""
    table = {}
    for name, (width, changes) in signals.items():
        indexes = [i for i, _ in changes]
        values = [Value(bits) for _, bits in changes]
        table[name] = SignalSeries(width, indexes, values)
    return Waveform(list(range(count)), table)


def run_script(source: str, waveform: Waveform, args=()):
    """Parse and execute a script; returns (stdout text, environment)."""
    out = io.StringIO()
    env = execute(parse_source(source), waveform, args=args, out=out)
    return out.getvalue(), env


def wave_from_vcd(text: str) -> Waveform:
    return parse_vcd(io.StringIO(text))


@pytest.fixture
def clocked_wave():
    """20 indexes, clk alternating from 1, plus an 8-bit counter that
    increments at every posedge."""
    clk = [(i, "10"[i % 2]) for i in range(20)]
    counter = [(i, format(i // 2, "08b")) for i in range(0, 20, 2)]
    return make_waveform(20, {"top.clk": (1, clk), "top.counter": (8, counter)})
