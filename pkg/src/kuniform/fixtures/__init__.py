"""Bundled fixture objects: witness matrices, a self-dual code, a known state."""

from importlib import resources
from pathlib import Path

NAMES = [
    "state_5qubit_d2.txt",
    "witness_2x2_d4.txt",
    "witness_2x2_d6.txt",
    "witness_6x6_d2.txt",
    "witness_8x8_d2.txt",
    "code_8_4_4_binary.txt",
]


def fixture_path(name: str) -> Path:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {NAMES}")
    return Path(str(resources.files(__package__).joinpath(name)))


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()
