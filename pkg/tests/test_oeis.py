import pytest

from catalan_ears import oeis
from catalan_ears.oeis import (
    BFile,
    BFileParseError,
    ConfigurationError,
    FetchConfig,
    TransportError,
    bundled_bfile,
    compare,
    fetch_bfile,
    oeis_check,
    parse_bfile,
)


@pytest.fixture
def no_network(monkeypatch):
    def refuse(seq_id, timeout):
        raise AssertionError(f"unexpected network access for {seq_id}")

    monkeypatch.setattr(oeis, "_download", refuse)


def test_parse_examples():
    assert parse_bfile("# comment\n0 2\n1 3\n").entries == ((0, 2), (1, 3))
    assert parse_bfile("").entries == ()
    assert parse_bfile("\n  # x\n\n5   7\n").entries == ((5, 7),)


def test_parse_malformed_line_number():
    with pytest.raises(BFileParseError, match="line 1") as info:
        parse_bfile("3 x")
    assert info.value.lineno == 1
    with pytest.raises(BFileParseError, match="line 3"):
        parse_bfile("# c\n0 1\n1\n")


@pytest.mark.parametrize("text", ["1 5\n1 6\n", "2 5\n1 6\n", "0 -4\n"])
def test_parse_rejects_invariant_violations(text):
    with pytest.raises(BFileParseError):
        parse_bfile(text)


def test_bundled_fixtures_exist():
    for seq in oeis.SEQUENCES:
        path = bundled_bfile(seq)
        assert path is not None and path.is_file()
    assert bundled_bfile("A000001") is None


def test_fetch_from_fixture(no_network, tmp_path):
    fixture = tmp_path / "b007054.txt"
    fixture.write_text("0 3\n1 2\n")
    got = fetch_bfile("A007054", FetchConfig(bfile=fixture, cache_dir=tmp_path / "cache"))
    assert got == BFile("A007054", ((0, 3), (1, 2)))


def test_fetch_without_fixture_or_network(no_network, tmp_path):
    with pytest.raises(ConfigurationError):
        fetch_bfile("A007054", FetchConfig(cache_dir=tmp_path))


def test_fetch_uses_env_cache_dir(no_network, tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path))
    (tmp_path / "b091894.txt").write_text("0 1\n1 1\n")
    assert fetch_bfile("A091894", FetchConfig()).values == [1, 1]


def test_fetch_cached_skips_network(no_network, tmp_path):
    (tmp_path / "b091894.txt").write_text("0 1\n1 1\n2 2\n")
    got = fetch_bfile("A091894", FetchConfig(cache_dir=tmp_path, allow_network=True))
    assert got.values == [1, 1, 2]


def test_fetch_network_populates_cache(tmp_path, monkeypatch):
    calls = []

    def fake(seq_id, timeout):
        calls.append(seq_id)
        return "# fetched\n0 3\n1 2\n"

    monkeypatch.setattr(oeis, "_download", fake)
    cfg = FetchConfig(cache_dir=tmp_path / "c", allow_network=True)
    assert fetch_bfile("A007054", cfg).values == [3, 2]
    assert fetch_bfile("A007054", cfg).values == [3, 2]
    assert calls == ["A007054"]
    assert (tmp_path / "c" / "b007054.txt").read_text().startswith("# fetched")
    assert [p.name for p in (tmp_path / "c").iterdir()] == ["b007054.txt"]


def test_fetch_transport_error(tmp_path, monkeypatch):
    def broken(url, timeout):
        raise OSError("unreachable")

    monkeypatch.setattr(oeis.urllib.request, "urlopen", broken)
    with pytest.raises(TransportError):
        fetch_bfile("A007054", FetchConfig(cache_dir=tmp_path, allow_network=True))
    assert not list(tmp_path.iterdir())


def test_bad_sequence_id():
    with pytest.raises(ValueError):
        fetch_bfile("7054", FetchConfig())


@pytest.mark.parametrize("seq, nmax", [("A007054", 50), ("A091894", 8)])
def test_check_with_bundled_fixture(no_network, seq, nmax):
    report = oeis_check(seq, nmax, FetchConfig(bfile=bundled_bfile(seq)))
    assert report.passed, report.to_json()
    assert report.offset == 1
    assert report.first_index == 1
    assert report.to_json()["offset"] == 1


def test_check_tampered_fixture(no_network, tmp_path):
    lines = bundled_bfile("A007054").read_text().splitlines()
    lines = [("20 1" if line.startswith("20 ") else line) for line in lines]
    tampered = tmp_path / "b007054.txt"
    tampered.write_text("\n".join(lines) + "\n")
    report = oeis_check("A007054", 50, FetchConfig(bfile=tampered))
    assert not report.passed
    assert report.offset == 1
    assert report.divergence["bfile_index"] == 20
    assert report.divergence["term"] == 19


def test_check_no_alignment():
    report = compare("A007054", [2, 3, 6, 14, 36, 99], parse_bfile("0 9\n1 9\n2 9\n3 9\n4 9\n5 9\n6 9\n"), 5)
    assert report.offset is None
    assert not report.passed


def test_check_short_bfile_fails():
    report = compare("A007054", [2, 3, 6, 14, 36, 99], parse_bfile("0 2\n1 3\n2 6\n3 14\n4 36\n"), 5)
    assert report.offset == 0
    assert report.compared == 5
    assert not report.passed


def test_alignment_prefers_smallest_shift():
    assert oeis.align([1, 1, 1, 1, 1], parse_bfile("0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n")) == 0


def test_unknown_sequence():
    with pytest.raises(ValueError):
        oeis.our_terms("A000045", 5)
