"""Filtered complexes with action windows, barcodes and displacement bounds."""

import json

from . import _core
from ._core import Error, fixtures, schedule_oscillation, theorem_bound

__all__ = [
    "Error",
    "barcode",
    "fixture",
    "fixtures",
    "linearize",
    "schedule_oscillation",
    "simulate",
    "theorem_bound",
    "validate_complex",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def barcode(complex_doc, engine="canonical"):
    """Bars as dicts {start, end, degree}; endpoints are rational strings."""
    return json.loads(_core.barcode(_text(complex_doc), engine))


def validate_complex(complex_doc):
    return json.loads(_core.validate_complex(_text(complex_doc)))


def simulate(timeline_doc):
    return json.loads(_core.simulate(_text(timeline_doc)))


def linearize(dga_doc, augmentation=None, a="0", b="inf", l="inf"):
    return json.loads(_core.linearize(_text(dga_doc), _text(augmentation or {}), str(a), str(b), str(l)))


def fixture(name, field="F2"):
    return json.loads(_core.fixture(name, field))
