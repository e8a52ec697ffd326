"""The big-picture graph: 27 typed diagram nodes and how they derive from
each other.

Edges come in three kinds.  Derivation ("this diagram is derived from that
one") forms a DAG and carries all propagation semantics; PartOfComplex marks
a curve segment conventionally selected from a richer schedule; DualView
joins two viewpoints of one concept.  The node/edge inventory ships as a JSON
data file so it can be amended without touching code.

The graph is immutable once constructed; every query is read-only and safe
to run concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import MacroAtlasError, PARAM_FIELDS, REGISTRY

EDGE_KINDS = ("Derivation", "PartOfComplex", "DualView")
SIDES = ("SupplySide", "DemandSide", "Integrative")


class GraphDataError(MacroAtlasError):
    """The graph data file violates a structural invariant."""


class UnknownNodeError(MacroAtlasError, KeyError):
    pass


class UnknownParameterError(MacroAtlasError, KeyError):
    pass


@dataclass(frozen=True)
class DiagramNode:
    id: int
    name: str
    side: str
    xLabel: str
    yLabel: str
    binding: str
    note: str = ""


@dataclass(frozen=True)
class Edge:
    from_id: int
    to_id: int
    kind: str
    note: str = ""


@dataclass(frozen=True)
class PropagationPlan:
    dirty: tuple[int, ...]       # topologically ordered
    trigger: tuple[str, ...]     # shocked parameter names

    def to_dict(self) -> dict:
        return {"dirty": list(self.dirty), "trigger": list(self.trigger)}

    @classmethod
    def from_dict(cls, raw: dict) -> "PropagationPlan":
        return cls(dirty=tuple(raw.get("dirty", ())),
                   trigger=tuple(raw.get("trigger", ())))


@dataclass(frozen=True, eq=True)
class BigPicture:
    nodes: tuple[DiagramNode, ...]
    edges: tuple[Edge, ...]
    param_owners: dict[str, tuple[int, ...]]

    def __post_init__(self) -> None:
        self._validate()

    # -- validation ----------------------------------------------------

    def _validate(self) -> None:
        ids = sorted(n.id for n in self.nodes)
        if ids != list(range(1, 28)):
            raise GraphDataError("node ids must be exactly 1..27")
        for n in self.nodes:
            if n.side not in SIDES:
                raise GraphDataError(f"node {n.id}: unknown side {n.side!r}")
            if not n.binding:
                raise GraphDataError(f"node {n.id}: missing binding")
            for label in (n.xLabel, n.yLabel):
                if label not in REGISTRY.glyphs():
                    raise GraphDataError(
                        f"node {n.id}: axis label {label!r} not in symbol registry")
        seen_dual: set[frozenset[int]] = set()
        for e in self.edges:
            if e.kind not in EDGE_KINDS:
                raise GraphDataError(f"unknown edge kind {e.kind!r}")
            if e.from_id not in set(ids) or e.to_id not in set(ids):
                raise GraphDataError(f"edge {e.from_id}->{e.to_id}: unknown endpoint")
            if e.kind == "PartOfComplex" and not e.note:
                raise GraphDataError(
                    f"PartOfComplex edge {e.from_id}->{e.to_id} needs a segment note")
            if e.kind == "DualView":
                pair = frozenset((e.from_id, e.to_id))
                if pair in seen_dual:
                    raise GraphDataError(f"duplicate DualView pair {sorted(pair)}")
                seen_dual.add(pair)
        self._topo_order()  # raises on a derivation cycle
        unknown = set(self.param_owners) - PARAM_FIELDS
        if unknown:
            raise GraphDataError(f"ownership map has unknown params: {sorted(unknown)}")
        missing = PARAM_FIELDS - set(self.param_owners)
        if missing:
            raise GraphDataError(f"ownership map misses params: {sorted(missing)}")
        for name, owners in self.param_owners.items():
            for node_id in owners:
                if not 1 <= node_id <= 27:
                    raise GraphDataError(f"param {name}: owner {node_id} not a node")

    # -- plumbing ------------------------------------------------------

    def node(self, node_id: int) -> DiagramNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise UnknownNodeError(node_id)

    def derivation_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.kind == "Derivation"]

    def _children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for e in self.derivation_edges():
            out[e.from_id].append(e.to_id)
        return out

    def _parents(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for e in self.derivation_edges():
            out[e.to_id].append(e.from_id)
        return out

    def _topo_order(self) -> list[int]:
        """Kahn's algorithm over Derivation edges; highest id wins ties."""
        children = self._children()
        indeg = {n.id: 0 for n in self.nodes}
        for e in self.derivation_edges():
            indeg[e.to_id] += 1
        ready = sorted((i for i, d in indeg.items() if d == 0))
        order: list[int] = []
        while ready:
            node_id = ready.pop()  # max id first
            order.append(node_id)
            for child in children[node_id]:
                indeg[child] -= 1
                if indeg[child] == 0:
                    ready.append(child)
                    ready.sort()
        if len(order) != len(self.nodes):
            raise GraphDataError("derivation edges contain a cycle")
        return order

    # -- queries -------------------------------------------------------

    def descendants(self, node_id: int) -> set[int]:
        """Transitive closure downstream over Derivation edges."""
        self.node(node_id)
        children = self._children()
        seen: set[int] = set()
        frontier = [node_id]
        while frontier:
            for child in children[frontier.pop()]:
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
        return seen

    def ancestors(self, node_id: int) -> set[int]:
        """Transitive closure upstream over Derivation edges."""
        self.node(node_id)
        parents = self._parents()
        seen: set[int] = set()
        frontier = [node_id]
        while frontier:
            for parent in parents[frontier.pop()]:
                if parent not in seen:
                    seen.add(parent)
                    frontier.append(parent)
        return seen

    def provenance_paths(self, a: int, b: int) -> list[list[int]]:
        """Every simple Derivation path from a to b, lexicographically sorted."""
        self.node(a)
        self.node(b)
        children = self._children()
        paths: list[list[int]] = []
        stack = [a]

        def walk(node_id: int) -> None:
            if node_id == b:
                paths.append(list(stack))
                return
            for child in sorted(children[node_id]):
                if child not in stack:
                    stack.append(child)
                    walk(child)
                    stack.pop()

        walk(a)
        return sorted(paths)

    def propagate(self, shocked_params) -> PropagationPlan:
        """Dirty set for a parameter shock: owning nodes plus all Derivation
        descendants, in topological order."""
        shocked = tuple(sorted(shocked_params))
        dirty: set[int] = set()
        for name in shocked:
            if name not in self.param_owners:
                raise UnknownParameterError(name)
            for owner in self.param_owners[name]:
                dirty.add(owner)
                dirty |= self.descendants(owner)
        order = [i for i in self._topo_order() if i in dirty]
        return PropagationPlan(dirty=tuple(order), trigger=shocked)

    # -- export --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nodes": [
                {"id": n.id, "name": n.name, "side": n.side, "xLabel": n.xLabel,
                 "yLabel": n.yLabel, "binding": n.binding, "note": n.note}
                for n in sorted(self.nodes, key=lambda n: n.id)
            ],
            "edges": [
                {"from": e.from_id, "to": e.to_id, "kind": e.kind, "note": e.note}
                for e in self.edges
            ],
            "paramOwners": {k: list(v) for k, v in sorted(self.param_owners.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False,
                          sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, raw: dict) -> "BigPicture":
        nodes = tuple(DiagramNode(**n) for n in raw["nodes"])
        edges = tuple(
            Edge(from_id=e["from"], to_id=e["to"], kind=e["kind"],
                 note=e.get("note", ""))
            for e in raw["edges"]
        )
        owners = {k: tuple(v) for k, v in raw["paramOwners"].items()}
        return cls(nodes=nodes, edges=edges, param_owners=owners)

    @classmethod
    def from_json(cls, text: str) -> "BigPicture":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self) -> str:
        """Deterministic DOT text: Derivation solid, DualView dashed with both
        arrowheads, PartOfComplex dotted."""
        lines = ["digraph bigpicture {", "  rankdir=LR;",
                 '  node [shape=box, fontsize=10];']
        for n in sorted(self.nodes, key=lambda n: n.id):
            label = n.name.replace('"', '\\"')
            lines.append(f'  n{n.id} [label="{n.id}. {label}"];')
        styles = {
            "Derivation": "style=solid",
            "DualView": "style=dashed, dir=both",
            "PartOfComplex": "style=dotted",
        }
        ordered = sorted(self.edges, key=lambda e: (e.kind, e.from_id, e.to_id))
        for e in ordered:
            attrs = styles[e.kind]
            if e.note:
                note = e.note.replace('"', '\\"')
                attrs += f', label="{note}"'
            lines.append(f"  n{e.from_id} -> n{e.to_id} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def canonical_graph() -> BigPicture:
    """Load and validate the packaged 27-node graph."""
    text = resources.files("macroatlas").joinpath("data/bigpicture.json").read_text("utf-8")
    return BigPicture.from_json(text)


def export_dot(graph: BigPicture) -> str:
    return graph.to_dot()
