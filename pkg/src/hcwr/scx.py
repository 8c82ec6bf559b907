"""SCX file format: JSON text holding a complex and an optional labeling.

Schema: ``{"format": "scx-1", "vertex_count": N,
"maximal_simplices": [[...], ...], "labels": [l_0, ..., l_{N-1}]}`` with
``labels`` optional.  A ``meta`` object may record how the complex was
generated (used to reconstruct family labelings like the torus tent);
unknown keys are ignored on read.
"""
from __future__ import annotations

import json
from typing import Optional

from .complexes import SimplicialComplex, build_complex, maximal_simplices
from .generators import LabeledComplex
from .morse import InvalidLabeling, MorseLabeling, validate_labeling

FORMAT = "scx-1"


class MissingLabels(ValueError):
    """The operation needs a labeling but the file carries none."""


def to_dict(K: SimplicialComplex, labeling: Optional[MorseLabeling] = None,
            meta: Optional[dict] = None) -> dict:
    doc = {
        "format": FORMAT,
        "vertex_count": K.vertex_count,
        "maximal_simplices": [list(s) for s in maximal_simplices(K)],
    }
    if labeling is not None:
        doc["labels"] = list(labeling.labels)
    if meta:
        doc["meta"] = meta
    return doc


def from_dict(doc: dict):
    """Returns (LabeledComplex, meta).  Labels, if present, are validated
    against the morse constraint."""
    if doc.get("format") != FORMAT:
        raise ValueError(f"unsupported format {doc.get('format')!r}")
    K = build_complex(doc["maximal_simplices"], doc["vertex_count"])
    labeling = None
    if doc.get("labels") is not None:
        labeling = MorseLabeling(tuple(doc["labels"]))
        bad = validate_labeling(K, labeling)
        if bad:
            raise InvalidLabeling(bad)
    return LabeledComplex(K, labeling), doc.get("meta", {})


def write_scx(path, K: SimplicialComplex,
              labeling: Optional[MorseLabeling] = None,
              meta: Optional[dict] = None):
    with open(path, "w") as fh:
        json.dump(to_dict(K, labeling, meta), fh)
        fh.write("\n")


def read_scx(path):
    with open(path) as fh:
        return from_dict(json.load(fh))
