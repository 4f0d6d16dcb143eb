"""Height-2 nilpotent B-orbits and their closure order."""

import json

from ._nilc import Engine, NilcError, run_cli, verify

__all__ = ["Engine", "NilcError", "run_cli", "verify", "poset"]


def poset(type_letter, rank, orbit="", tilde=False):
    """Hasse diagram as a dict with "nodes" and "covers"."""
    return json.loads(Engine(type_letter, rank).poset_json(orbit, tilde))
