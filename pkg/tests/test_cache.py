from unittest.mock import Mock

from superorbit.cache import cache_directory, cached_algebra, load_algebra
from superorbit.superalg import from_brackets


def _sl2():
    return from_brackets(
        "sl2",
        ("e", "h", "f"),
        (0, 0, 0),
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
    )


def test_disabled_without_a_directory():
    assert cache_directory() is None
    build = Mock(side_effect=_sl2)
    cached_algebra("sl2", build)
    cached_algebra("sl2", build)
    assert build.call_count == 2


def test_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("SUPERORBIT_CACHE", str(tmp_path))
    build = Mock(side_effect=_sl2)

    first = cached_algebra("D21-1/3", build)
    second = cached_algebra("D21-1/3", build)

    assert build.call_count == 1
    assert (tmp_path / "D21-1_3.v1.json").exists()
    assert second.basis_names == first.basis_names
    assert second.structure == first.structure


def test_mirrored_variable_is_honored(tmp_path, monkeypatch):
    monkeypatch.setenv("CACHE", str(tmp_path))
    assert cache_directory() == tmp_path


def test_unreadable_entry_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("SUPERORBIT_CACHE", str(tmp_path))
    (tmp_path / "G3.v1.json").write_text("not json")
    assert load_algebra("G3") is None
