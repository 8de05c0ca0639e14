import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffsample import Circuit, CircuitWriter, adjoint, parse, parse_one, sample_clifford, serialize, stream_clifford
from cliffsample.formats import FORMATS, ParseError


def test_qasm_single_h():
    text = serialize(Circuit(1, [("H", 1)]), "qasm").decode()
    assert text == 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[1];\nh q[0];\n'


def test_jsonl_empty_is_header_only():
    assert serialize(Circuit(3, seed=5), "jsonl") == b'{"n": 3, "seed": 5}\n'


def test_text_is_one_based():
    text = serialize(Circuit(2, [("CX", 2, 1), ("SDG", 1)]), "text").decode()
    assert text.splitlines() == ["# n=2 seed=-", "CX(2,1)", "SDG(1)"]


def test_jsonl_gate_objects():
    lines = serialize(Circuit(2, [("CX", 1, 2), ("Y", 2)], seed=3), "jsonl").decode().splitlines()
    assert [json.loads(x) for x in lines] == [
        {"n": 2, "seed": 3},
        {"g": "CX", "q": [1, 2]},
        {"g": "Y", "q": [2]},
    ]


@pytest.mark.parametrize("fmt", FORMATS)
@pytest.mark.parametrize("segments", [False, True])
def test_roundtrip_sampled(fmt, segments):
    c = sample_clifford(4, 17)
    back = parse_one(serialize(c, fmt, segments=segments), fmt)
    assert back == c
    assert back.n == 4 and back.seed == 17
    assert back.segments == (c.segments if segments else None)


@pytest.mark.parametrize("fmt", FORMATS)
def test_roundtrip_adjoint_with_sdg(fmt):
    c = adjoint(sample_clifford(6, 2))
    assert parse_one(serialize(c, fmt), fmt) == c


@pytest.mark.parametrize("fmt", FORMATS)
@given(n=st.integers(1, 12), seed=st.integers(0, 2**64 - 1))
def test_roundtrip_property(fmt, n, seed):
    c = sample_clifford(n, seed)
    assert parse_one(serialize(c, fmt), fmt) == c


@pytest.mark.parametrize("fmt", FORMATS)
def test_streamed_equals_serialized(fmt):
    buf = io.StringIO()
    w = CircuitWriter(buf, fmt, segments=True)
    w.begin(9, 123)
    stream_clifford(9, 123, w, on_segment=w.mark)
    assert buf.getvalue().encode() == serialize(sample_clifford(9, 123), fmt, segments=True)


@pytest.mark.parametrize("fmt", FORMATS)
def test_multiple_circuits(fmt):
    cs = [sample_clifford(n, s) for n, s in [(3, 1), (5, 2), (1, 3)]]
    data = b"".join(serialize(c, fmt) for c in cs)
    assert parse(data, fmt) == cs


@pytest.mark.parametrize(
    "fmt,data",
    [
        ("qasm", 'OPENQASM 2.0;\nqreg q[2];\nt q[0];\n'),
        ("qasm", 'OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];\n'),
        ("qasm", 'OPENQASM 3.0;\nqreg q[2];\n'),
        ("qasm", 'OPENQASM 2.0;\nqreg q[2];\nh q[2];\n'),
        ("jsonl", '{"g": "H", "q": [1]}\n'),
        ("jsonl", '{"n": 1, "seed": null}\n{"g": "CX", "q": [1]}\n'),
        ("text", "# n=2 seed=-\nH(3)\n"),
        ("text", "H(1)\n"),
        ("text", "# n=2 seed=-\nRZ(1)\n"),
    ],
)
def test_parse_errors(fmt, data):
    with pytest.raises(ParseError):
        parse(data, fmt)
