"""Rotation distance estimates between unlabeled binary trees.

Trees are ``StackGraph`` values; build them from levels, or parse bracket
(``"((xx)x)"``), step (``"++-+-"``) or level (``"0,1,2,1,2,1"``) text.
"""

import json

from ._rotpath import (
    RotpathError,
    StackGraph,
    apply_lift,
    apply_lower,
    catalan,
    classify_step,
    conjecture_report_json,
    enumerate_trees,
    enumerative_decode,
    exact_distance,
    find_rotation_path,
    greedy_common_lift,
    greedy_distance,
    hasse_dot,
    left_comb,
    lift_sites,
    lower_sites,
    minimal_upper_bounds,
    mirror,
    pointwise_leq,
    random_stack_graph,
    right_comb,
    stack_graph_svg,
    tamari_leq,
    tree_dot,
)


def tree(text, format=None):
    """Parse a tree in any of the three text formats."""
    return StackGraph.parse(text, format)


def conjecture_report(n_max, n_min=1, samples=200, seed=1, jobs=1):
    """Greedy-versus-exact report as a dict."""
    return json.loads(conjecture_report_json(n_max, n_min, samples, seed, jobs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
