"""Path fixture files shipped with the package.

Format: ``# alpha: a,b`` header, other ``#`` lines are comments, then one
path per line as comma-separated node labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..eisenstein import EJInt, Generator, parse_alpha, parse_label


@dataclass(frozen=True)
class PathFixture:
    name: str
    generator: Generator
    paths: tuple[tuple[EJInt, ...], ...]


def available() -> list[str]:
    return sorted(
        f.name[:-4] for f in resources.files(__name__).iterdir() if f.name.endswith(".txt")
    )


def parse_fixture(text: str, name: str = "<string>") -> PathFixture:
    generator = None
    paths = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            if key.strip() == "alpha":
                generator = parse_alpha(value.strip())
            continue
        paths.append(tuple(parse_label(tok) for tok in line.split(",")))
    if generator is None:
        raise ValueError(f"fixture {name} has no '# alpha:' header")
    return PathFixture(name, generator, tuple(paths))


def load(name: str) -> PathFixture:
    text = resources.files(__name__).joinpath(f"{name}.txt").read_text(encoding="utf-8")
    return parse_fixture(text, name)
