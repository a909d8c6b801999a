"""Policy-tree export: Graphviz DOT plus a machine-readable JSON document.

Conventions: edges carry the agent's 0-based coordinate choice; terminal
nodes are double-circled; nodes whose state is already smooth (some point
with coordinate sum <= 1) are filled blue; loop and depth-capped nodes are
dashed. Output is byte-stable for identical inputs.
"""

from __future__ import annotations

import json

from ..search import GameTree
from .statefile import state_document


def _node_label(node) -> str:
    lines = [
        "(" + ", ".join(str(c) for c in p) + ")" for p in node.state.config.points
    ]
    if node.state.weights is not None:
        lines.append("w = (" + ", ".join(str(w) for w in node.state.weights) + ")")
    if node.loop:
        lines.append("loop")
    if node.depth_capped:
        lines.append("capped")
    return "\\n".join(lines)


def tree_to_dot(tree: GameTree) -> str:
    out = ["digraph policy_tree {"]
    out.append('  node [shape=ellipse, fontname="monospace"];')
    for node in tree.nodes:
        attrs = [f'label="{_node_label(node)}"']
        if node.terminal:
            attrs.append("peripheries=2")
        styles = []
        if node.smooth:
            styles.append("filled")
            attrs.append("fillcolor=lightblue")
        if node.loop or node.depth_capped:
            styles.append("dashed")
        if styles:
            attrs.append(f'style="{",".join(styles)}"')
        out.append(f"  n{node.node_id} [{', '.join(attrs)}];")
    for node in tree.nodes:
        for label, child_id in node.children:
            out.append(f'  n{node.node_id} -> n{child_id} [label="{label}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def tree_to_document(tree: GameTree) -> str:
    nodes = []
    for node in tree.nodes:
        entry = {
            "id": node.node_id,
            "depth": node.depth,
            "state": state_document(node.state, tree.rules),
            "terminal": node.terminal,
            "smooth": node.smooth,
            "loop": node.loop,
            "depth_capped": node.depth_capped,
        }
        if node.host_move is not None:
            entry["host_move"] = list(node.host_move)
        if node.parent is not None:
            entry["parent"] = node.parent
            entry["edge"] = node.edge_label
        nodes.append(entry)
    doc = {"variant": tree.rules.variant_id, "nodes": nodes}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
