"""Bundled sample gehms.

Small named instances used throughout the tests and demos:

    fig2      four hypervertices, hyperedges of degrees 2, 3 and 4,
              four hyperfaces, plane and orientable; its degree-4
              partial dual has Euler genus 4
    fig3      one degree-3 hyperedge, two hypervertices, plane
    fig6a     one degree-3 hyperedge, non-orientable (Euler genus 2),
              Tutte polynomial x + y - 2
    fig6b     one degree-3 hyperedge, orientable of Euler genus 2,
              same Tutte polynomial x + y - 2
    fig10-h1  one degree-4 hyperedge; same dichromatic polynomial as
    fig10-h2  its sibling but a different Whitney polynomial
"""

from __future__ import annotations

import json
from importlib import resources

from ..core import Gehm

NAMES = ("fig2", "fig3", "fig6a", "fig6b", "fig10-h1", "fig10-h2")


def load(name: str) -> Gehm:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {NAMES}")
    text = resources.files(__package__).joinpath(f"{name}.json").read_text()
    return Gehm.from_obj(json.loads(text))
