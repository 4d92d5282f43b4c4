"""Bundled reference data: biquandle tables, bracket coefficient files and
the validated diagram corpus (named after the standard virtual knotoid
tabulation).  The corpus manifest records which reference checks each file
passed when it was frozen."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..biquandle import FiniteBiquandle, parse_operation_matrix
from ..bracket import VirtualBracket, parse_bracket
from ..diagram import KnotoidDiagram, parse_diagram


def data_dir() -> Path:
    return Path(str(resources.files(__package__)))


def corpus_dir() -> Path:
    return data_dir() / "corpus"


def load_biquandle(name: str) -> FiniteBiquandle:
    path = data_dir() / "biquandles" / (name + ".biq")
    return parse_operation_matrix(path.read_text(encoding="utf-8"))


def load_bracket(name: str, biquandle: FiniteBiquandle) -> VirtualBracket:
    path = data_dir() / "brackets" / (name + ".bvb")
    return parse_bracket(path.read_text(encoding="utf-8"), biquandle)


def load_corpus(name: str) -> KnotoidDiagram:
    path = corpus_dir() / (name + ".knd")
    return parse_diagram(path.read_text(encoding="utf-8"), name=name)


def corpus_names() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.knd"))


def corpus_manifest() -> dict:
    return json.loads((corpus_dir() / "manifest.json").read_text(encoding="utf-8"))
