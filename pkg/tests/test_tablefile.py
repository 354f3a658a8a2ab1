import json

import pytest

from pregroup import check_axioms, check_lemmas, group_cyclic, hnn_pregroup, subgroup_pregroup
from pregroup.tablefile import (
    TableFileError,
    parse_group,
    parse_table,
    serialize_group,
    serialize_table,
)


def test_round_trip(p8):
    data = serialize_table(p8)
    assert parse_table(data) == p8
    assert serialize_table(parse_table(data)) == data


def test_round_trip_other_tables(s3, z4):
    for t in (subgroup_pregroup(s3, ["e", "s"]), hnn_pregroup(z4, ["0", "2"])):
        data = serialize_table(t)
        assert serialize_table(parse_table(data)) == data


def doc(p8):
    return json.loads(serialize_table(p8))


def test_missing_identity(p8):
    d = doc(p8)
    del d["identity"]
    with pytest.raises(TableFileError, match="identity"):
        parse_table(json.dumps(d))


def test_unknown_key_and_duplicates(p8):
    d = doc(p8)
    d["extra"] = 1
    with pytest.raises(TableFileError, match="extra"):
        parse_table(json.dumps(d))
    d = doc(p8)
    d["products"].append(d["products"][0])
    with pytest.raises(TableFileError, match=r"products\[\d+\]"):
        parse_table(json.dumps(d))
    with pytest.raises(TableFileError, match="duplicate key"):
        parse_table('{"elements": [], "elements": []}')


def test_malformed(p8):
    with pytest.raises(TableFileError):
        parse_table(b"{not json")
    with pytest.raises(TableFileError):
        parse_table(b"[]")
    d = doc(p8)
    d["products"][0] = ["e", "e"]
    with pytest.raises(TableFileError, match=r"products\[0\]"):
        parse_table(json.dumps(d))
    d = doc(p8)
    d["products"].append(["e", "zz", "e"])
    with pytest.raises(TableFileError, match="zz"):
        parse_table(json.dumps(d))


def test_corrupted_table_parses_but_fails_checks(p8):
    d = doc(p8)
    d["products"].append(["a1", "b1", "e"])
    t = parse_table(json.dumps(d))
    assert not (check_axioms(t).ok and check_lemmas(t).ok)


def test_group_file():
    z6 = group_cyclic(6)
    data = serialize_group(z6)
    assert parse_group(data) == z6
    d = json.loads(data)
    d["products"].pop()
    with pytest.raises(TableFileError, match="total"):
        parse_group(json.dumps(d))
    d = json.loads(data)
    d["inverse"]["1"] = "1"
    with pytest.raises(TableFileError, match="disagrees"):
        parse_group(json.dumps(d))
