"""Generalized entropy families, q-deformed composition, and axiom audits."""

import json as _json

from ._qentropy import (
    QEntropyError,
    chain_rule,
    conditional_entropy,
    direct_product,
    entropy,
    escort,
    h_inv,
    h_map,
    info_content,
    make_distribution,
    q_add,
)
from ._qentropy import audit_json as _audit_json
from ._qentropy import counterexample_json as _counterexample_json


def counterexample():
    """The paper-exact chain-rule counterexample report as a dict."""
    return _json.loads(_counterexample_json())


def audit(family, axiom, **kwargs):
    """Run one axiom check and return the report as a dict."""
    return _json.loads(_audit_json(family, axiom, **kwargs))


__all__ = [
    "QEntropyError",
    "audit",
    "chain_rule",
    "conditional_entropy",
    "counterexample",
    "direct_product",
    "entropy",
    "escort",
    "h_inv",
    "h_map",
    "info_content",
    "make_distribution",
    "q_add",
]
