import json
import math
import time

import pytest

from schurlift.chartable import (
    OrthogonalityError,
    PowerMapError,
    TableParseError,
    dumps_table,
    inner,
    load_character_table,
    loads_table,
    validate_table,
)
from schurlift.cyclotomic import ONE
from schurlift.dixon import character_table, dixon_primes
from schurlift.finite_field import GF, field
from schurlift.fixtures import load_fixture, resolve_fixture
from schurlift.groups import (
    GroupError,
    GroupTooLargeError,
    MissingPowerMapError,
    build_group,
    conjugacy_classes,
    format_permutation,
    matrix_group,
    parse_permutation,
    permutation_group,
    power_map,
)
from schurlift.named_groups import alternating4, named_group, psl27, symmetric4


def test_permutation_parsing():
    assert parse_permutation("(1,2,3)(4,5)") == (1, 2, 0, 4, 3)
    assert parse_permutation("(1 2)", 4) == (1, 0, 2, 3)
    assert parse_permutation("()") == ()
    assert format_permutation((1, 2, 0, 4, 3)) == "(1,2,3)(4,5)"
    for bad in ["(1,1)", "(0,2)", "1,2", "(1,2"]:
        with pytest.raises(GroupError):
            parse_permutation(bad)


@pytest.mark.parametrize("build, order", [(symmetric4, 24), (alternating4, 12), (psl27, 168)])
def test_group_orders(build, order):
    assert build().order == order


def test_element_order_is_deterministic():
    a, b = symmetric4(), symmetric4()
    assert a.elements == b.elements


def test_cap_and_shapes():
    with pytest.raises(GroupTooLargeError):
        permutation_group(["(1,2,3,4,5,6,7,8)", "(1,2)"], cap=1000)
    with pytest.raises(GroupError):
        build_group([(1, 0), (1, 0, 2)])


def test_finite_fields():
    F9 = field(9)
    assert F9.modulus == (1, 0, 1)  # t^2 + 1
    assert F9.mul(3, 3) == F9.neg(1)  # t^2 = -1
    assert all(F9.mul(x, F9.inv(x)) == 1 for x in range(1, 9))
    assert field(4).modulus == (1, 1, 1)
    with pytest.raises(ValueError):
        GF(6)


def test_matrix_groups():
    # SL(2,3) has order 24
    G = matrix_group([[1, 1, 0, 1], [1, 0, 1, 1]], "gf 3")
    assert G.order == 24
    assert named_group("sl29").order == 720
    assert named_group("v1080").order == 1080
    # a cyclotomic matrix group: <diag(E(3), E(3)^2), [[0,1],[1,0]]> is S3 x ... of order 6
    H = matrix_group([["E(3)", "0", "0", "E(3)^2"], ["0", "1", "1", "0"]], "cyc 3")
    assert H.order == 6


def test_conjugacy_classes_s4_a4():
    cs = conjugacy_classes(symmetric4())
    assert sorted(cs.sizes) == sorted([1, 6, 3, 8, 6])
    assert cs.labels[0] == "1a" and cs.sizes[0] == 1
    cs = conjugacy_classes(alternating4())
    assert dict(zip(cs.labels, zip(cs.sizes, cs.orders))) == {
        "1a": (1, 1),
        "2a": (3, 2),
        "3a": (4, 3),
        "3b": (4, 3),
    }
    assert len(conjugacy_classes(build_group([()]))) == 1


def test_power_maps_a4_s4():
    cs = conjugacy_classes(alternating4())
    sq = power_map(cs, 2)
    idx = {lab: i for i, lab in enumerate(cs.labels)}
    assert sq[idx["3a"]] == idx["3b"] and sq[idx["3b"]] == idx["3a"]
    assert sq[idx["1a"]] == idx["1a"] and sq[idx["2a"]] == idx["1a"]
    assert power_map(cs, 1) == list(range(4))
    s4 = conjugacy_classes(symmetric4())
    cube = power_map(s4, 3)
    for c in range(len(s4)):
        assert cube[c] == (0 if s4.orders[c] == 3 else c)


def test_power_map_composition():
    cs = conjugacy_classes(psl27())
    for a in range(1, 8):
        for b in range(1, 8):
            pa, pb, pab = power_map(cs, a), power_map(cs, b), power_map(cs, a * b)
            assert [pa[pb[c]] for c in range(len(cs))] == pab
    for c in range(len(cs)):
        for m in range(1, 10):
            o = cs.orders[c]
            assert cs.orders[power_map(cs, m)[c]] == o // math.gcd(o, m)


def test_dixon_primes():
    p = next(dixon_primes(168, 84))
    assert p % 84 == 1 and p > 2 * math.sqrt(168)


@pytest.mark.parametrize(
    "name, degrees",
    [("s4", [1, 1, 2, 3, 3]), ("a4", [1, 1, 1, 3]), ("psl27", [1, 3, 3, 6, 7, 8])],
)
def test_computed_tables(name, degrees):
    G = named_group(name)
    t = character_table(G)
    assert sorted(t.degrees) == degrees
    assert validate_table(t).ok
    assert t.irreducibles[0] == [ONE] * len(t.degrees)


def test_a4_three_dimensional_values(a4):
    chi = next(c for c in a4.irreducibles if c[0] == 3)
    vals = {lab: chi[i] for i, lab in enumerate(a4.classes.labels)}
    assert vals == {"1a": 3, "3a": 0, "3b": 0, "2a": -1}


def test_fixture_invariants(tables):
    for name, t in tables.items():
        assert sum(d * d for d in t.degrees) == t.order, name
        inv = t.inverse_classes()
        for chi in t.irreducibles:
            for c in range(t.num_classes):
                assert chi[inv[c]] == chi[c].conj()
        for i, a in enumerate(t.irreducibles):
            assert inner(t, a, a) == 1


def test_fixtures_match_recomputation():
    for name in ["a4", "s4", "psl27"]:
        fresh = character_table(named_group(name))
        stored = load_fixture(name)
        assert stored.classes.labels == fresh.classes.labels
        assert stored.irreducibles == fresh.irreducibles


def test_v1080_fixture(v1080):
    assert v1080.num_classes == 17 and len(v1080) == 17
    assert v1080.degrees == [1, 3, 3, 3, 3, 5, 5, 6, 6, 8, 8, 9, 9, 9, 10, 15, 15]
    assert v1080.provenance["kind"] == "computed"


def test_trivial_table_is_accepted(tables):
    assert tables["trivial"].degrees == [1]


def test_fixture_resolution(tmp_path, monkeypatch):
    assert resolve_fixture("fixtures/a4.tbl").name == "a4.tbl"
    assert resolve_fixture("a4").name == "a4.tbl"
    text = resolve_fixture("a4").read_text()
    (tmp_path / "mine.tbl").write_text(text)
    monkeypatch.setenv("SCHURLIFT_FIXTURES", str(tmp_path))
    assert resolve_fixture("fixtures/mine.tbl") == tmp_path / "mine.tbl"
    assert load_fixture("mine").degrees == [1, 1, 1, 3]
    with pytest.raises(FileNotFoundError):
        resolve_fixture("a4")


def _a4_doc():
    return json.loads(resolve_fixture("a4").read_text())


def test_corrupted_value_is_an_orthogonality_failure():
    doc = _a4_doc()
    doc["irreducibles"][3][1] = "-2"
    with pytest.raises(OrthogonalityError) as exc:
        loads_table(json.dumps(doc))
    assert exc.value.kind == "orthogonality"


def test_bad_power_map_is_reported_separately():
    doc = _a4_doc()
    doc["power_maps"]["2"] = [1, 1, 3, 4]  # 3a should square into 3b
    with pytest.raises(PowerMapError) as exc:
        loads_table(json.dumps(doc))
    assert exc.value.kind == "power_map"


def test_parse_errors():
    with pytest.raises(TableParseError):
        loads_table("{not json")
    doc = _a4_doc()
    del doc["classes"]
    with pytest.raises(TableParseError):
        loads_table(json.dumps(doc))
    doc = _a4_doc()
    doc["irreducibles"][1][2] = "E(3"
    with pytest.raises(TableParseError):
        loads_table(json.dumps(doc))


def test_missing_power_map_for_a_prime_dividing_the_order():
    doc = _a4_doc()
    del doc["power_maps"]["2"]
    t = loads_table(json.dumps(doc))
    with pytest.raises(MissingPowerMapError):
        t.power_map(2)
    # 5 is prime to |A4|, so it is recovered from the Galois action
    assert t.power_map(5) == t.power_map(-1)


def test_table_round_trip(tables):
    for t in tables.values():
        again = loads_table(dumps_table(t))
        assert again.irreducibles == t.irreducibles
        assert again.classes.labels == t.classes.labels


def test_sl29_within_budget():
    start = time.perf_counter()
    t = character_table(named_group("sl29"))
    assert time.perf_counter() - start < 300
    assert sorted(t.degrees) == [1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10]
