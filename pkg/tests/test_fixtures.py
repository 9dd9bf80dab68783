import hashlib

import pytest

from riordan_moments.errors import MalformedLine, NetworkDisabled, NonContiguousIndex, NotFound, ParseError
from riordan_moments.fixtures import (
    FetchConfig,
    SequenceFixture,
    cache_store,
    fixture_from_bfile,
    fixture_ids,
    load_fixture,
    load_triangle,
    oeis_fetch,
    parse_bfile,
    parse_bfile_lines,
    serialize_bfile,
    triangle_names,
    verify_sequence,
)
from riordan_moments.series import Series
from riordan_moments.transforms import EgfSeries, transform_T


def test_parse_examples():
    assert parse_bfile("0 1\n1 1\n2 2\n3 5") == [1, 1, 2, 5]
    assert parse_bfile(b"# comment\n1 1\n2 0\n3 1\n4 3\n5 14\n6 77") == [1, 0, 1, 3, 14, 77]
    offset, _, comments = parse_bfile_lines("# hi\n\n5 1\n6 2\n")
    assert offset == 5 and comments == ["hi"]
    with pytest.raises(NonContiguousIndex):
        parse_bfile("0 1\n2 2")
    with pytest.raises(MalformedLine) as err:
        parse_bfile("0 1\n1 x\n")
    assert err.value.lineno == 2


def test_serialize_round_trip():
    fx = SequenceFixture("A000108", 0, (1, 1, 2, 5), "Catalan", "ogf")
    assert fixture_from_bfile("A000108", serialize_bfile(fx)) == fx
    with pytest.raises(ValueError):
        SequenceFixture("B1", 0, (1,))


def test_embedded_store():
    ids = fixture_ids()
    assert len(ids) == 16 and "A000670" in ids
    fx = load_fixture("A052709")
    assert fx.terms[:5] == (0, 1, 1, 3, 9)
    assert load_fixture("A129775").offset == 1
    assert load_fixture("A000142").kind == "egf"
    with pytest.raises(NotFound):
        load_fixture("A999999")
    assert len(triangle_names()) == 9
    assert load_triangle("A008292").rows[3] == (1, 11, 11, 1)
    with pytest.raises(NotFound):
        load_triangle("nope")


def test_verify_sequence():
    catalan = transform_T(EgfSeries(Series([1] * 10)))
    assert verify_sequence(catalan, load_fixture("A000108")).ok
    springer = load_fixture("A001586")
    out = transform_T(EgfSeries.from_terms(springer.terms[:10]))
    assert verify_sequence(out, load_fixture("A052709"), skip=1).ok
    bad = list(load_fixture("A000108").terms)
    bad[6] += 1
    rep = verify_sequence(bad, load_fixture("A000108"))
    assert not rep and rep.first_mismatch == 6 and "index 6" in str(rep)


class Opener:
    def __init__(self, payload):
        self.payload = payload
        self.calls = []

    def __call__(self, url, timeout):
        self.calls.append(url)
        return self.payload


def test_fetch_populates_and_reuses_cache(tmp_path):
    payload = b"0 1\n1 2\n2 6\n3 22\n4 90\n"
    cfg = FetchConfig(cache_dir=tmp_path, url_template="https://example.invalid/{id}/b{digits}.txt",
                      allow_network=True)
    opener = Opener(payload)
    fx = oeis_fetch("A006318", cfg, opener)
    assert fx.terms == (1, 2, 6, 22, 90)
    assert opener.calls == ["https://example.invalid/A006318/b006318.txt"]
    again = oeis_fetch("A006318", cfg, opener)
    assert again == fx and len(opener.calls) == 1
    digest = hashlib.sha256(payload).hexdigest()
    assert (tmp_path / "objects" / f"{digest}.txt").read_bytes() == payload


def test_fetch_offline(tmp_path):
    cfg = FetchConfig(cache_dir=tmp_path, allow_network=False)
    with pytest.raises(NetworkDisabled):
        oeis_fetch("A000108", cfg, Opener(b""))
    cache_store(tmp_path, "A000108", b"0 1\n1 1\n2 2\n")
    assert oeis_fetch("A000108", cfg).terms == (1, 1, 2)


def test_fetch_rejects_bad_payload_and_tampering(tmp_path):
    cfg = FetchConfig(cache_dir=tmp_path, allow_network=True)
    with pytest.raises(ParseError):
        oeis_fetch("A000108", cfg, Opener(b"<html>oops</html>"))
    assert not (tmp_path / "refs" / "A000108").exists()
    digest = cache_store(tmp_path, "A000108", b"0 1\n1 1\n")
    (tmp_path / "objects" / f"{digest}.txt").write_bytes(b"0 9\n")
    opener = Opener(b"0 1\n1 1\n2 2\n")
    assert oeis_fetch("A000108", cfg, opener).terms == (1, 1, 2)
    assert len(opener.calls) == 1


def test_fetch_config_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("RIORDAN_MOMENTS_CACHE", str(tmp_path))
    monkeypatch.setenv("RIORDAN_MOMENTS_OFFLINE", "1")
    cfg = FetchConfig()
    assert cfg.cache_dir == tmp_path and not cfg.allow_network
