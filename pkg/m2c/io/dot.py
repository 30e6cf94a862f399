"""
DOT export of a condition's pasting surface at one index tuple.

The graph is the dual of the pasting diagram. Vertices are the 1-cell composites the sweep
passes through, so objects and 1-cells only show up inside vertex labels. Every face, which
is a 2-cell, becomes an edge from its source composite to its target composite, labelled
with the face and its value. Each hemisphere also gets a summary node carrying the value
of its whole composite.
"""

import logging
from typing import List, Optional, Sequence

from m2c.builtin.conditions import CONDITIONS, Domain, fillersFor
from m2c.core.cells import boundary
from m2c.core.errors import M2CError, UnknownCondition
from m2c.core.evaluator import evaluate
from m2c.core.report import ConditionId
from m2c.core.settings import Settings
from m2c.monoidal.instance import Instance

logger = logging.getLogger(__name__)

STYLES = {"lhs": "solid", "rhs": "dashed"}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _value(inst: Instance, cell) -> str:
    try:
        return inst.model.render(evaluate(cell, inst.model))
    except M2CError as e:
        return f"error: {e}"


def export_diagram(inst: Instance, condition: str, tokens: Sequence[str],
                   depth: Optional[int] = None, fillers: Optional[str] = None) -> str:
    """DOT text for `condition` at the index whose tokens are `tokens`."""
    settings = Settings()
    try:
        cid = ConditionId(condition)
    except ValueError:
        raise UnknownCondition(f"Unknown condition: {condition}")
    domain = Domain(inst, depth or settings.depth)
    cond = CONDITIONS[cid]
    index = cond.find(domain, tokens)
    surface = cond.surface(domain, index, fillersFor(fillers or settings.fillers, inst.monoidal))

    title = f"{cid.value}({','.join(tokens)})"
    lines: List[str] = [f"digraph {_quote(title)} {{",
                        "  rankdir=TB;",
                        "  node [shape=box, fontname=monospace];"]
    nodes: List[str] = []

    def node(label: str) -> str:
        if label not in nodes:
            nodes.append(label)
            lines.append(f"  {_quote(label)};")
        return _quote(label)

    sides = surface.sides()
    for side, faces, whole in (("lhs", surface.lhs, sides[0]), ("rhs", surface.rhs, sides[1])):
        for i, face in enumerate(faces):
            src, tgt = boundary(face.cell)
            a, b = node(src.label()), node(tgt.label())
            label = f"{side}{i + 1} {face.label} = {_value(inst, face.cell)}"
            lines.append(f"  {a} -> {b} [label={_quote(label)}, style={STYLES[side]}];")
        summary = f"{side} = {_value(inst, whole)}"
        lines.append(f"  {_quote('hemisphere ' + side)} [shape=note, label={_quote(summary)}];")

    lines.append("}")
    logger.info("Exported %s at (%s) with %d vertices.", cid.value, ", ".join(tokens), len(nodes))
    return "\n".join(lines) + "\n"
