"""Exact Hilbert series of superpolynomial invariants.

Inputs are the same JSON documents the command-line tool reads, passed as
dicts (or JSON strings); results come back as decoded dicts.
"""

import json

from . import _superinv
from ._superinv import SuperinvError

__all__ = ["SuperinvError", "molien", "molien_check", "cycle_index", "wreath", "collate", "shuffle", "verify", "coefficient"]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _character(chi):
    return chi if chi in ("trivial", "sgn") else _text(chi)


def molien(group, dq, du=None, character="trivial"):
    return json.loads(_superinv.molien(_text(group), dq, du, _character(character)))


def molien_check(group, dq, character="trivial"):
    return json.loads(_superinv.molien_check(_text(group), dq, _character(character)))


def cycle_index(perm, flavor="invariant"):
    return json.loads(_superinv.cycle_index(_text(perm), flavor))


def wreath(perm, group, n, flavor="invariant", dq=6, du=None, route="plethysm"):
    return json.loads(_superinv.wreath(_text(perm), _text(group), n, flavor, dq, du, route))


def collate(group, N=3, dq=6, du=None, flavor="invariant", route="product"):
    return json.loads(_superinv.collate(_text(group), N, dq, du, flavor, route))


def shuffle(a, b, signed=False):
    return json.loads(_superinv.shuffle(_text(a), _text(b), signed))


def verify(suite="all", seed=42):
    return json.loads(_superinv.verify(suite, seed))


def coefficient(series, t=0, q=0, u=0):
    """Coefficient of t^t q^q u^u in a decoded series, as a string fraction."""
    for c in series["coeffs"]:
        if (c["t"], c["q"], c["u"]) == (t, q, u):
            return c["c"]
    return "0"
