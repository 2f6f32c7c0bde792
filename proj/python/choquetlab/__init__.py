"""Exact Choquet-theory computations on finite function spaces.

Thin dict-level wrapper around the compiled ``_choquetlab`` extension: spaces
and reports cross the boundary as JSON documents, and this package parses
them so callers work with plain dictionaries.
"""

import json as _json

import _choquetlab as _core

__version__ = _core.tool_version()
SCHEMA = _core.schema_version()


def _doc(text):
    return _json.loads(text)


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


# -- gallery ----------------------------------------------------------------

def interval_space(variant, grid, param=None, field="real"):
    """Grid space on [0, 1] with one endpoint constraint (variants 1-3)."""
    raw = "" if param is None else _json.dumps(param)
    return _doc(_core.interval_space(variant, grid, raw, field))


def anchored_band(alpha="1/4", beta="1/2", grid=2, variant=1, field="real"):
    """Band of grid points plus two anchors pinning the left midpoint."""
    return _doc(_core.anchored_band(_json.dumps(alpha), _json.dumps(beta),
                                    grid, variant, field))


def porcupine(spine, quills, field="real"):
    """Spine points with averaged quill pairs over the marked labels."""
    return _doc(_core.porcupine(list(spine), list(quills), field))


def two_point(field="real"):
    return _doc(_core.two_point(field))


def square_affine(field="real"):
    return _doc(_core.square_affine(field))


def balanced_pair(grid=1, field="real"):
    return _doc(_core.balanced_pair(grid, field))


def random_space(n, m, seed=0, force_constants=False, field="real"):
    return _doc(_core.random_space(n, m, seed, force_constants, field))


# -- analysis ---------------------------------------------------------------

def analyze(space, phase_grid=64, seed=0, field_override=""):
    """Full report: boundary classification plus the six condition verdicts."""
    return _doc(_core.analyze(_text(space), phase_grid, seed, field_override))


def boundary(space, phase_grid=64, seed=0, field_override=""):
    """Boundary report: classification, evaluation norms, phase classes."""
    return _doc(_core.boundary(_text(space), phase_grid, seed, field_override))


def dirichlet(space, phase_grid=64, seed=0, field_override=""):
    """Dilation report for a simplicial space; raises ValueError otherwise."""
    return _doc(_core.dirichlet(_text(space), phase_grid, seed, field_override))


def verify_report(report):
    """Re-checks a report against a fresh replay; raises ValueError on drift."""
    _core.verify_report(_text(report))


def condition_statuses(space):
    """Mapping from condition key to 'True' / 'False' / 'Unknown'."""
    return dict(_core.condition_statuses(_text(space)))


def boundary_members(space):
    """Labels whose evaluations are decided extreme, in point order."""
    return list(_core.boundary_members(_text(space)))


def dual_norm_at(space, label, phase_grid=64):
    """Dual norm of the evaluation at ``label``: exact value or enclosure."""
    return _doc(_core.dual_norm_at(_text(space), label, phase_grid))
