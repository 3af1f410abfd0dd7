import json

import pytest

import aoaforge

PROJECT_A = """code,duration,predecessors
α,0,-
A,2,α
B,2,α
C,2,H
D,3,α
E,4,B;G
F,2,C;I
G,3,A;D
H,4,B;D
I,5,H
J,3,C
ω,0,E;J;F
"""


def test_parse_and_emit_round_trip():
    table = aoaforge.parse_table(PROJECT_A)
    assert len(table) == 12
    assert table.rows[5].code == "E"
    assert table.rows[5].predecessors == ["B", "G"]
    again = aoaforge.parse_table(table.to_csv())
    assert again.to_csv() == table.to_csv()


def test_convert_builds_the_network():
    conv = aoaforge.convert(PROJECT_A)
    assert conv.stats.event_count == 12
    assert conv.stats.real_arc_count == 12
    assert conv.stats.dummy_arc_count == 5
    assert conv.stats.used_fallback is False
    assert [d.id for d in conv.dummies] == ["f1", "f2", "f3", "f4", "f5"]
    assert conv.dummies[0].replaced == [("B", "E")]
    assert conv.dummies[0].grouping == "singleton"
    labels = {a.label for a in conv.network.arcs}
    assert {"A", "f5", "α", "ω"} <= labels
    f5 = next(a for a in conv.network.arcs if a.label == "f5")
    assert (f5.tail, f5.head, f5.is_dummy) == (4, 7, True)


def test_schedule_finds_the_critical_path():
    conv = aoaforge.convert(PROJECT_A)
    sched = aoaforge.schedule(conv)
    assert sched.makespan == 14
    assert sched.critical == ["α", "D", "H", "I", "F", "ω"]
    assert sched.early[conv.network.sink_id] == 14
    assert sched.total_float["A"] == 5


def test_json_and_dot_exports():
    conv = aoaforge.convert(PROJECT_A)
    doc = json.loads(conv.to_json())
    assert len(doc["events"]) == 12
    assert doc["stats"]["z_bar_count"] == 5
    assert conv.network.to_dot().startswith("digraph aoa {")


def test_levels():
    layers = aoaforge.levels(PROJECT_A)
    assert layers[1] == ["α"]
    assert layers[2] == ["A", "B", "D"]
    assert layers[6] == ["ω"]


def test_generate_table_is_deterministic():
    one = aoaforge.generate_table(8, 0.3, 5)
    two = aoaforge.generate_table(8, 0.3, 5)
    assert one.to_csv() == two.to_csv()
    conv = aoaforge.convert(one.to_csv())
    assert conv.stats.event_count >= 3


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError, match="line 2"):
        aoaforge.parse_table("code,duration,predecessors\nx,nope,-\n")
    with pytest.raises(ValueError, match="cycle"):
        aoaforge.convert("code,duration,predecessors\na,1,b\nb,1,a\n")
    with pytest.raises(ValueError, match="strict"):
        aoaforge.convert("code,duration,predecessors\na,1,-\n", strict=True)
