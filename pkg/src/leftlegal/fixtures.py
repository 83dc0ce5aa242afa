"""The example tables shipped with the package."""

from importlib import resources

from .finite import parse_cayley

FIXTURES = ("table1", "table3", "table4", "table5")


def fixture_path(name):
    return resources.files("leftlegal") / "tables" / f"{name}.cay"


def load_fixture(name):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return parse_cayley(fixture_path(name).read_text(encoding="utf-8"))
