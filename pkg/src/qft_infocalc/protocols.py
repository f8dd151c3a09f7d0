"""Teleportation and superdense coding simulations plus information-flow diagrams.

The simulations act on exact state vectors.  The diagram ledger assigns an
entropy weight to each edge species and checks that every vertex passes
as much weight out as it takes in.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np

from .clifford import I2, SIGMA1, SIGMA3
from .linalg import tensor
from .states import BELL_KETS, QubitState

SOURCE = "SOURCE"
SINK = "SINK"
SPECIES = ("q", "qbar", "c", "e", "ebar")
CONJUGATE = {"q": "qbar", "qbar": "q", "e": "ebar", "ebar": "e"}
VERTEX_KINDS = ("M", "U")

# Bell-measurement outcomes in projection order; bits are (bit-flip, phase-flip).
BELL_ORDER = ("phi+", "phi-", "psi+", "psi-")
BELL_BITS = {"phi+": (0, 0), "phi-": (0, 1), "psi+": (1, 0), "psi-": (1, 1)}

# Teleportation: after outcome (x, z) the receiver holds X^x Z^z psi, so
# apply Z^z X^x to undo it.
TELEPORT_CORRECTION = {
    (0, 0): I2,
    (0, 1): SIGMA3,
    (1, 0): SIGMA1,
    (1, 1): SIGMA3 @ SIGMA1,
}
# Superdense coding: bits (x, z) are packed with sigma_1^x sigma_3^z.
SUPERDENSE_ENCODING = {
    (0, 0): I2,
    (0, 1): SIGMA3,
    (1, 0): SIGMA1,
    (1, 1): SIGMA1 @ SIGMA3,
}


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: str


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    species: str
    multiplicity: int = 1


@dataclass(frozen=True)
class InfoDiagram:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise DiagramError("vertex ids must be unique")
        for v in self.vertices:
            if v.id in (SOURCE, SINK):
                raise DiagramError(f"{v.id} is reserved for external legs")
            if v.kind not in VERTEX_KINDS:
                raise DiagramError(f"vertex {v.id!r} has kind {v.kind!r}, expected M or U")
        known = set(ids)
        for e in self.edges:
            if e.src not in known and e.src != SOURCE:
                raise DiagramError(f"edge source {e.src!r} is not a vertex")
            if e.dst not in known and e.dst != SINK:
                raise DiagramError(f"edge target {e.dst!r} is not a vertex")
            if not isinstance(e.multiplicity, int) or e.multiplicity < 1:
                raise DiagramError(f"edge multiplicity must be a positive integer, got {e.multiplicity!r}")

    @classmethod
    def from_json(cls, doc: dict | str) -> "InfoDiagram":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            vertices = [Vertex(str(v["id"]), str(v["kind"])) for v in doc["vertices"]]
            edges = [
                Edge(str(e["from"]), str(e["to"]), str(e["species"]), e.get("multiplicity", 1))
                for e in doc["edges"]
            ]
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed diagram document: missing field {exc}") from exc
        return cls(vertices, edges, str(doc.get("name", "")))

    def to_json(self) -> dict:
        doc = {
            "vertices": [{"id": v.id, "kind": v.kind} for v in self.vertices],
            "edges": [
                {"from": e.src, "to": e.dst, "species": e.species, "multiplicity": e.multiplicity}
                for e in self.edges
            ],
        }
        if self.name:
            doc["name"] = self.name
        return doc


@dataclass(frozen=True)
class SpeciesWeights:
    """Entropy carried by one unit of each edge species, in bits."""

    weights: dict = field(
        default_factory=lambda: {"q": 1.0, "qbar": -1.0, "c": 1.0, "e": 1.0, "ebar": -1.0}
    )

    def __post_init__(self):
        w = self.weights
        if "e" in w and "ebar" in w and w["e"] != -w["ebar"]:
            raise ValueError("ebit and antiebit weights must be negatives of each other")

    def __getitem__(self, species: str) -> float:
        try:
            return self.weights[species]
        except KeyError:
            raise DiagramError(f"unknown species {species!r}") from None


@dataclass(frozen=True)
class ConservationReport:
    residuals: dict

    @property
    def passed(self) -> bool:
        return all(r == 0 for r in self.residuals.values())

    @property
    def violations(self) -> dict:
        return {k: r for k, r in self.residuals.items() if r != 0}


def check_conservation(d: InfoDiagram, w: SpeciesWeights | None = None) -> ConservationReport:
    """Incoming minus outgoing entropy weight at every vertex."""
    w = w or SpeciesWeights()
    res = {v.id: 0.0 for v in d.vertices}
    for e in d.edges:
        flow = w[e.species] * e.multiplicity
        if e.dst in res:
            res[e.dst] += flow
        if e.src in res:
            res[e.src] -= flow
    return ConservationReport(res)


def reverse_edges(d: InfoDiagram, which: Iterable[int] | None = None) -> InfoDiagram:
    """Send quantum edges backwards in time.

    Each selected edge swaps its endpoints and its species turns into the
    conjugate (``e <-> ebar``, ``q <-> qbar``), which leaves every vertex
    balance unchanged.  With ``which=None`` all quantum edges are reversed;
    classical edges have no conjugate and are never reversed.
    """
    idx = set(range(len(d.edges))) if which is None else set(which)
    edges = []
    for i, e in enumerate(d.edges):
        if i in idx and e.species in CONJUGATE:
            src = SOURCE if e.dst == SINK else e.dst
            dst = SINK if e.src == SOURCE else e.src
            edges.append(Edge(src, dst, CONJUGATE[e.species], e.multiplicity))
        elif i in idx and which is not None:
            raise DiagramError(f"edge {i} carries classical species {e.species!r}; it cannot run backwards")
        else:
            edges.append(e)
    return replace(d, edges=tuple(edges))


def canonical_form(d: InfoDiagram) -> InfoDiagram:
    """Rewrite internal outgoing ebits as incoming antiebits in the reverse direction."""
    which = [i for i, e in enumerate(d.edges) if e.species == "e" and e.src != SOURCE and e.dst != SINK]
    return reverse_edges(d, which)


def edge_multiset(d: InfoDiagram) -> list[tuple]:
    return sorted((e.src, e.dst, e.species, e.multiplicity) for e in d.edges)


def builtin_diagrams() -> dict[str, InfoDiagram]:
    """Teleportation (fig1) and the two superdense-coding diagrams (fig2, fig3)."""
    fig1 = InfoDiagram(
        [Vertex("M", "M"), Vertex("U", "U")],
        [
            Edge(SOURCE, "M", "q"),
            Edge("U", "M", "e"),
            Edge("M", "U", "c", 2),
            Edge("U", SINK, "q"),
        ],
        "fig1",
    )
    fig2 = InfoDiagram(
        [Vertex("U", "U"), Vertex("M", "M")],
        [
            Edge(SOURCE, "U", "c", 2),
            Edge("M", "U", "ebar"),
            Edge("U", "M", "q"),
            Edge("M", SINK, "c", 2),
        ],
        "fig2",
    )
    fig3 = InfoDiagram(
        [Vertex("U", "U"), Vertex("M", "M")],
        [
            Edge(SOURCE, "U", "c", 2),
            Edge("U", "M", "e"),
            Edge("U", "M", "q"),
            Edge("M", SINK, "c", 2),
        ],
        "fig3",
    )
    return {"fig1": fig1, "fig2": fig2, "fig3": fig3}


# --- state-vector simulations -------------------------------------------------


def _apply_1q(op: np.ndarray, state: np.ndarray, target: int, nqubits: int) -> np.ndarray:
    ops = [I2] * nqubits
    ops[target] = op
    return tensor(*ops) @ state


def _bell_branches(state: np.ndarray, nqubits: int):
    """Project qubits (0, 1) onto each Bell state; yields (bits, prob, remainder)."""
    rest = 2 ** (nqubits - 2)
    amps = state.reshape(4, rest)
    for name in BELL_ORDER:
        remainder = BELL_KETS[name].conj() @ amps
        prob = float(np.vdot(remainder, remainder).real)
        yield BELL_BITS[name], prob, remainder


@dataclass(frozen=True)
class TeleportBranch:
    bits: tuple[int, int]
    probability: float
    output: QubitState
    fidelity: float


@dataclass(frozen=True)
class TeleportResult:
    output: QubitState
    classical_bits: tuple[int, int]
    fidelity: float


def fidelity(a: QubitState, b: QubitState) -> float:
    return float(abs(np.vdot(a.vector, b.vector)) ** 2)


def teleport_branches(q: QubitState) -> list[TeleportBranch]:
    """Every Bell-measurement outcome of teleporting `q`, with Bob's corrected qubit.

    Qubit 0 carries the input, qubits 1 and 2 share ``|Phi+>``; qubits 0 and
    1 are measured at M and qubit 2 is corrected at U.
    """
    state = tensor(q.vector, BELL_KETS["phi+"])
    out = []
    for bits, prob, rem in _bell_branches(state, 3):
        bob = TELEPORT_CORRECTION[bits] @ (rem / math.sqrt(prob))
        res = QubitState.from_vector(bob)
        out.append(TeleportBranch(bits, prob, res, fidelity(q, res)))
    return out


def teleport(q: QubitState, seed: int = 0) -> TeleportResult:
    """Teleport `q`, sampling the Bell outcome from a generator seeded with `seed`."""
    rng = np.random.default_rng(seed)
    branches = teleport_branches(q)
    probs = np.array([b.probability for b in branches])
    pick = branches[int(rng.choice(len(branches), p=probs / probs.sum()))]
    return TeleportResult(pick.output, pick.bits, pick.fidelity)


def superdense(bits: tuple[int, int]) -> tuple[int, int]:
    """Send two classical bits through one qubit of a shared ``|Phi+>`` pair.

    The sender encodes on qubit 0; the receiver's Bell measurement is
    deterministic, so the most probable outcome is returned after checking
    that its probability is 1.
    """
    bits = tuple(int(b) for b in bits)
    if bits not in SUPERDENSE_ENCODING:
        raise ValueError(f"bits must be two values from {{0, 1}}, got {bits}")
    state = _apply_1q(SUPERDENSE_ENCODING[bits], BELL_KETS["phi+"], 0, 2)
    outcomes = [(prob, b) for b, prob, _ in _bell_branches(state, 2)]
    prob, decoded = max(outcomes)
    if abs(prob - 1.0) > 1e-12:
        raise ArithmeticError(f"Bell measurement not deterministic: p={prob!r}")
    return decoded
