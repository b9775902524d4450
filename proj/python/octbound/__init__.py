"""Interval verification of simplex inequalities."""

import json

from ._core import (
    Interval,
    builtin_task_names,
    circumradius,
    classify,
    delta_oct,
    enclose,
    gamma,
    pt,
    score_fixture,
    solid_angle,
    tool_version,
    volume,
    vor,
    _verify,
)

__version__ = tool_version()


def verify(task, max_depth=40, jobs=1, max_cells=0, time_limit=0.0):
    """Run branch and bound on a builtin task name or a task JSON string.

    Returns the report as a dict, the same document the CLI writes.
    """
    return json.loads(_verify(task, max_depth, jobs, max_cells, time_limit))


__all__ = [
    "Interval",
    "builtin_task_names",
    "circumradius",
    "classify",
    "delta_oct",
    "enclose",
    "gamma",
    "pt",
    "score_fixture",
    "solid_angle",
    "tool_version",
    "verify",
    "volume",
    "vor",
]
