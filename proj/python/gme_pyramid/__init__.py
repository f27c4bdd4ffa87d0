"""Geometric genuine multipartite entanglement measures for pure states."""

import json

from ._core import *  # noqa: F401,F403
from ._core import __version__, evaluate_json, reference_report_json


def evaluate(state, id="state", tol=1e-9):
    """Full measure report for one state as a dict."""
    return json.loads(evaluate_json(state, id, tol))


def reference_report():
    """Reference example comparison as a dict."""
    return json.loads(reference_report_json())
