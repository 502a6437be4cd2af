import pytest

from ejpan import Generator, fixtures
from ejpan.eisenstein import EJInt


def test_available():
    assert "table1" in fixtures.available()


def test_table1_contents():
    fx = fixtures.load("table1")
    assert fx.generator == Generator(2, 3)
    assert len(fx.paths) == 18
    assert [len(p) - 1 for p in fx.paths] == list(range(1, 19))
    assert all(p[0] == EJInt(0, 1) and p[-1] == EJInt(1, 0) for p in fx.paths)
    # row 18, printed as "-1+rho2", is read as -1 + rho^2
    assert fx.paths[17][10] == EJInt(-2, 1)


def test_parse_fixture_text():
    fx = fixtures.parse_fixture("# alpha: 1,2\n# note\n\n0, 1\n0, r, 1\n", "demo")
    assert fx.name == "demo" and fx.generator == Generator(1, 2)
    assert fx.paths == ((EJInt(0, 0), EJInt(1, 0)), (EJInt(0, 0), EJInt(0, 1), EJInt(1, 0)))


def test_parse_fixture_needs_alpha():
    with pytest.raises(ValueError):
        fixtures.parse_fixture("0, 1\n")
