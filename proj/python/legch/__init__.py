"""Legendrian braid closures over GF(2): DGA presentations, augmentations,
torus-link monodromy and verification reports.

Braids are given either as ``torus=(p, q)`` or as ``strands=q`` with a comma
separated ``word``. Results are plain dicts and lists mirroring the JSON the
``legch`` command prints. Invalid input raises ``ValueError``.
"""

import json

from . import _core

__all__ = [
    "dga",
    "augment",
    "augment_dot",
    "orbit",
    "closed_form_mu",
    "period_composition",
    "identities",
    "toy_moves",
    "certify",
    "count_D",
    "enumerate_D",
    "minimal_period",
    "closure_invariants",
]


def dga(torus=None, strands=None, word="", names="label"):
    """Generators, gradings and differentials. ``names`` is one of
    ``"label"``, ``"torus"`` or ``"position"``."""
    return json.loads(_core.dga(torus, strands, word, names))


def augment(torus=None, strands=None, word="", last_third_label=False):
    return json.loads(_core.augment(torus, strands, word, last_third_label))


def augment_dot(torus=None, strands=None, word=""):
    return _core.augment_dot(torus, strands, word)


def orbit(p, q, m=None):
    return json.loads(_core.orbit(p, q, m))


def closed_form_mu(p, q):
    return json.loads(_core.closed_form_mu(p, q))


def period_composition(p, q):
    return json.loads(_core.period_composition(p, q))


def identities(p, q, symbolic_limit=5):
    return json.loads(_core.identities(p, q, symbolic_limit))


def toy_moves():
    return json.loads(_core.toy_moves())


def certify(torus=None, torus_range=None, config=None):
    """Verification report for one pair or every coprime pair up to
    ``torus_range``. ``config`` overrides guards, e.g. ``{"workers": 2}``."""
    cfg = json.dumps(config) if config else ""
    if (torus is None) == (torus_range is None):
        raise ValueError("give exactly one of torus or torus_range")
    if torus is not None:
        return json.loads(_core.certify_pair(torus[0], torus[1], cfg))
    return json.loads(_core.certify_range(torus_range, cfg))


def count_D(n):
    return _core.count_D(n)


def enumerate_D(n):
    return [tuple(s) for s in _core.enumerate_D(n)]


def minimal_period(sequence):
    return _core.minimal_period(list(sequence))


def closure_invariants(torus=None, strands=None, word=""):
    return json.loads(_core.closure_invariants(torus, strands, word))
