import itertools
import json
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qft_infocalc.protocols import (
    SINK,
    SOURCE,
    DiagramError,
    Edge,
    InfoDiagram,
    SpeciesWeights,
    Vertex,
    builtin_diagrams,
    canonical_form,
    check_conservation,
    edge_multiset,
    reverse_edges,
    superdense,
    teleport,
    teleport_branches,
)
from qft_infocalc.states import QubitState, random_qubit


def same_up_to_phase(a, b, tol=1e-12):
    return abs(abs(np.vdot(a, b)) - 1) <= tol


# --- diagram ledger ------------------------------------------------------------------


def vertex_diagram(incoming, outgoing):
    edges = [Edge(SOURCE, "V", s, m) for s, m in incoming] + [Edge("V", SINK, s, m) for s, m in outgoing]
    return InfoDiagram([Vertex("V", "M")], edges)


def test_measurement_vertex_balances():
    rep = check_conservation(vertex_diagram([("q", 1), ("e", 1)], [("c", 2)]))
    assert rep.passed and rep.residuals == {"V": 0.0}


def test_unitary_vertex_with_antiebit_balances():
    rep = check_conservation(vertex_diagram([("c", 2), ("ebar", 1)], [("q", 1)]))
    assert rep.passed


def test_malformed_vertex_reported():
    rep = check_conservation(vertex_diagram([("q", 1)], [("c", 2)]))
    assert not rep.passed
    assert rep.violations == {"V": -1.0}


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig3"])
def test_builtin_figures_balance(name):
    rep = check_conservation(builtin_diagrams()[name])
    assert all(r == 0 for r in rep.residuals.values())


def test_fig3_reverses_into_fig2():
    figs = builtin_diagrams()
    assert edge_multiset(canonical_form(figs["fig3"])) == edge_multiset(figs["fig2"])


def test_fig1_canonical_unitary_vertex_inputs():
    d = canonical_form(builtin_diagrams()["fig1"])
    into_u = sorted((e.species, e.multiplicity) for e in d.edges if e.dst == "U")
    assert into_u == [("c", 2), ("ebar", 1)]


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig3"])
def test_time_reversal_keeps_balance(name):
    d = reverse_edges(builtin_diagrams()[name])
    assert check_conservation(d).passed


def test_reversing_twice_is_identity():
    d = builtin_diagrams()["fig1"]
    assert edge_multiset(reverse_edges(reverse_edges(d))) == edge_multiset(d)


def test_classical_edge_cannot_be_reversed():
    d = builtin_diagrams()["fig1"]
    idx = next(i for i, e in enumerate(d.edges) if e.species == "c")
    with pytest.raises(DiagramError):
        reverse_edges(d, [idx])


def test_unknown_species_rejected():
    with pytest.raises(DiagramError, match="species"):
        check_conservation(vertex_diagram([("z", 1)], []))


def test_species_weights_consistency():
    with pytest.raises(ValueError):
        SpeciesWeights({"e": 1.0, "ebar": 1.0})


@pytest.mark.parametrize(
    "doc, msg",
    [
        ({"vertices": [{"id": "A", "kind": "X"}], "edges": []}, "kind"),
        ({"vertices": [{"id": "A", "kind": "M"}], "edges": [{"from": "B", "to": "A", "species": "q"}]}, "source"),
        ({"vertices": [{"id": "A", "kind": "M"}]}, "edges"),
        ({"vertices": [{"id": "A", "kind": "M"}, {"id": "A", "kind": "U"}], "edges": []}, "unique"),
        (
            {"vertices": [{"id": "A", "kind": "M"}], "edges": [{"from": "A", "to": "SINK", "species": "q", "multiplicity": 0}]},
            "multiplicity",
        ),
    ],
)
def test_diagram_json_errors(doc, msg):
    with pytest.raises(DiagramError, match=msg):
        InfoDiagram.from_json(doc)


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig3"])
def test_diagram_json_round_trip(name):
    d = builtin_diagrams()[name]
    back = InfoDiagram.from_json(json.dumps(d.to_json()))
    assert back == d


# --- teleportation ----------------------------------------------------------------------


def test_teleport_basis_state_every_branch():
    for b in teleport_branches(QubitState(1, 0)):
        assert same_up_to_phase(b.output.vector, [1, 0])


def test_teleport_real_superposition_fidelity():
    branches = teleport_branches(QubitState(0.6, 0.8))
    assert sorted(b.bits for b in branches) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    for b in branches:
        assert abs(b.fidelity - 1) <= 1e-12
        assert b.probability == pytest.approx(0.25, abs=1e-12)


@given(st.integers(0, 2**32 - 1))
def test_teleport_random_inputs(seed):
    q = random_qubit(np.random.default_rng(seed))
    for b in teleport_branches(q):
        assert abs(b.fidelity - 1) <= 1e-12


def test_teleport_outcome_frequencies():
    q = QubitState(0.6, 0.8j)
    counts = Counter(teleport(q, seed).classical_bits for seed in range(4000))
    for bits in itertools.product((0, 1), repeat=2):
        assert abs(counts[bits] / 4000 - 0.25) <= 0.03


def test_teleport_seeded_reproducibility():
    q = QubitState(0.6, 0.8)
    assert teleport(q, 7) == teleport(q, 7)


# --- superdense coding ------------------------------------------------------------------


def test_superdense_identity_encoding():
    assert superdense((0, 0)) == (0, 0)


def test_superdense_bit_flip():
    assert superdense((1, 0)) == (1, 0)


def test_superdense_bijective():
    inputs = list(itertools.product((0, 1), repeat=2))
    outputs = [superdense(b) for b in inputs]
    assert outputs == inputs


def test_superdense_rejects_bad_bits():
    with pytest.raises(ValueError):
        superdense((2, 0))
