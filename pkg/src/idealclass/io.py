"""JSON interchange for posets and Cayley tables, and DOT export of Hasse diagrams.

Poset documents::

    {"elements": ["a", "b", ...], "leq": [[i, j], ...]}

where ``[i, j]`` means element i ≤ element j.  Reflexive pairs are optional
and the transitive closure is taken on load.

Monoid documents::

    {"size": n, "table": [[...], ...]}
"""
from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .class_monoid import AbstractMonoid, IdealClassMonoid, build_class_monoid, idempotents
from .errors import MalformedTable, NotAPoset, ParseError
from .gap_poset import AbstractPoset, GapPoset
from .ideals import InclusionPoset, build_inclusion_poset
from .semigroup import NumericalSemigroup, from_gaps, from_generators

__all__ = [
    "parse_semigroup",
    "poset_to_doc",
    "poset_from_doc",
    "monoid_to_doc",
    "monoid_from_doc",
    "poset_to_dot",
    "preceq_poset",
    "gap_poset_or_empty",
    "poset_of",
    "dumps",
    "loads",
]


def parse_semigroup(literal: str) -> NumericalSemigroup:
    """Parse ``gens:4,6,9`` or ``gaps:1,2,3,5,7,11``."""
    kind, sep, body = literal.strip().partition(":")
    if not sep or kind not in ("gens", "gaps"):
        raise ParseError(f"expected 'gens:...' or 'gaps:...', got {literal!r}")
    try:
        values = [int(tok) for tok in body.split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"non-integer entry in {literal!r}") from None
    if kind == "gens":
        if not values:
            raise ParseError("at least one generator is required")
        if min(values) <= 0:
            raise ParseError("generators must be positive")
        return from_generators(values)
    return from_gaps(values)


def poset_to_doc(P: AbstractPoset) -> dict:
    n = len(P)
    pairs = [[i, j] for i in range(n) for j in range(n) if i != j and P.leq[i, j]]
    return {"elements": [str(e) for e in P.elements], "leq": pairs}


def poset_from_doc(doc: dict) -> AbstractPoset:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise ParseError("poset document needs an 'elements' list")
    elements = doc["elements"]
    pairs = doc.get("leq", [])
    if not isinstance(elements, list) or not isinstance(pairs, list):
        raise ParseError("'elements' and 'leq' must be lists")
    try:
        pairs = [(int(i), int(j)) for i, j in pairs]
    except (TypeError, ValueError):
        raise ParseError("every 'leq' entry must be a pair of indices") from None
    try:
        return AbstractPoset.from_pairs([str(e) for e in elements], pairs)
    except NotAPoset as exc:
        raise ParseError(f"not a partial order after closure: {exc}") from exc


def monoid_to_doc(M: AbstractMonoid) -> dict:
    return {"size": len(M), "table": M.table.tolist()}


def monoid_from_doc(doc: dict) -> AbstractMonoid:
    if not isinstance(doc, dict) or "table" not in doc:
        raise ParseError("monoid document needs a 'table'")
    table = doc["table"]
    size = doc.get("size", len(table))
    if len(table) != size or any(len(row) != size for row in table):
        raise MalformedTable(f"table is not {size}x{size}")
    return AbstractMonoid(table)


def preceq_poset(M: IdealClassMonoid) -> AbstractPoset:
    """(𝔍₀(S), ⪯) labelled by minimal generators."""
    return AbstractPoset(M.labels(), M.preceq)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_to_dot(
    P: AbstractPoset,
    name: str = "poset",
    gray: Sequence[int] = (),
    dashed: Sequence[tuple[int, int]] = (),
) -> str:
    """Hasse diagram, drawn bottom to top.

    Nodes in ``gray`` are filled gray; ``dashed`` adds extra edges drawn
    dashed (used for inclusion covers that are not ⪯-covers).
    """
    gray = set(gray)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, label in enumerate(P.elements):
        style = ", style=filled, fillcolor=gray" if i in gray else ""
        lines.append(f"  n{i} [label={_quote(str(label))}{style}];")
    for i, j in sorted(P.covers):
        lines.append(f"  n{i} -> n{j};")
    for i, j in sorted(dashed):
        lines.append(f"  n{i} -> n{j} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gap_poset_or_empty(S: NumericalSemigroup) -> AbstractPoset:
    return GapPoset(S) if not S.is_naturals else AbstractPoset([], np.zeros((0, 0), dtype=bool))


def poset_of(S: NumericalSemigroup, which: str, limit: int | None = None):
    """Return ``(poset, gray_nodes, dashed_edges)`` for ``which`` in gaps | inclusion | preceq."""
    if which == "gaps":
        return gap_poset_or_empty(S), (), ()
    if which == "inclusion":
        return build_inclusion_poset(S, limit), (), ()
    if which == "preceq":
        M = build_class_monoid(S, limit)
        P = preceq_poset(M)
        incl = InclusionPoset(S, M.elements)
        missing = sorted(set(incl.covers) - set(P.covers))
        return P, idempotents(M), missing
    raise ParseError(f"unknown poset kind {which!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False)


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
