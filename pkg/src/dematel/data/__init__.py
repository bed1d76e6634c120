"""Bundled fixtures from the smart-city worked example.

``criteria.csv``         the ten challenge codes C1-C10 with names
``direct_relation.csv``  the published 10-expert mean direct-relation matrix
``panel.csv``            a reconstructed 10-expert survey whose cell means
                         equal ``direct_relation.csv`` exactly.  Only three
                         cells use real published score vectors; the rest
                         are synthetic.
"""

from importlib.resources import files
from pathlib import Path

CRITERIA = "criteria.csv"
DRM = "direct_relation.csv"
PANEL = "panel.csv"


def path(name: str) -> Path:
    return Path(str(files(__name__).joinpath(name)))


def read_text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")
