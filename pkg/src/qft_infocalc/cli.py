"""Command-line front end.

Structured results go to stdout (JSON, or CSV for spectra and time
series); a one-line human summary goes to stderr.  Exit status is 0 when
every requested check passes, 1 on a check violation and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import channels, clifford, entropy, linalg, protocols, sigma_lattice, states, susyqm

SEED_ENV = "QFT_INFOCALC_SEED"


class InputError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False)


def _read_json(path: str, what: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"--{what}: cannot read {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"--{what}: {path!r} is not valid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_state(args, default: str) -> states.DensityMatrix:
    if getattr(args, "state", None):
        try:
            return states.state_from_json(_read_json(args.state, "state"))
        except (ValueError, linalg.DimensionError) as exc:
            raise InputError(f"--state: {exc}") from None
    name = getattr(args, "builtin", None) or default
    if name == "bell":
        return states.bell_state()
    if name == "ghz":
        return states.ghz_state()
    if name == "werner":
        return states.werner_state(args.p)
    if name == "plus":
        s = 1 / np.sqrt(2)
        return states.density_of(states.QubitState(s, s))
    raise InputError(f"--builtin: unknown state {name!r}")


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV}: expected an integer, got {raw!r}") from None


# --- subcommands --------------------------------------------------------------


def cmd_entropy(args):
    rho = _load_state(args, "bell")
    value = entropy.von_neumann(rho)
    return 0, _dump({"dims": list(rho.dims), "von_neumann_bits": value}), f"S = {value:.12g} bits"


def cmd_conditional(args):
    rho = _load_state(args, "bell")
    try:
        rep = entropy.conditional_entropy(rho, args.condition_on)
    except linalg.DimensionError as exc:
        raise InputError(f"state: {exc}") from None
    agree = rep.methods_agree
    doc = {
        "value": rep.value,
        "method": rep.method,
        "support_rank": rep.support_rank,
        "difference_value": rep.difference_value,
        "operator_value": rep.operator_value,
        "methods_agree": agree,
        "condition_on": args.condition_on,
    }
    code = 1 if agree is False else 0
    return code, _dump(doc), f"S(A|B) = {rep.value:.12g} bits (rank {rep.support_rank})"


def cmd_ternary(args):
    rho = _load_state(args, "ghz")
    try:
        ents = entropy.tripartite_entropies(rho)
    except linalg.DimensionError as exc:
        raise InputError(f"state: {exc}") from None
    chain = entropy.chain_rule_check(rho)
    doc = {
        "entropies": ents,
        "conditional_mutual": entropy.conditional_mutual(rho),
        "ternary_mutual": entropy.ternary_mutual(rho),
        "chain_rule": {
            "telescoping_residual": chain.telescoping_residual,
            "printed_form_residual": chain.printed_form_residual,
            "terms": chain.terms,
        },
    }
    code = 0 if chain.telescoping_residual <= 1e-8 else 1
    return code, _dump(doc), f"S(u:d:s) = {doc['ternary_mutual']:.3e}"


def cmd_teleport(args):
    seed = _seed(args)
    if args.state:
        try:
            q = states.qubit_from_json(_read_json(args.state, "state"))
        except ValueError as exc:
            raise InputError(f"--state: {exc}") from None
    else:
        q = states.QubitState(1, 0)
    res = protocols.teleport(q, seed)
    doc = {
        "seed": seed,
        "input": states.complex_to_json(q.vector),
        "output": states.complex_to_json(res.output.vector),
        "classical_bits": list(res.classical_bits),
        "fidelity": res.fidelity,
    }
    code = 0 if abs(res.fidelity - 1) <= 1e-12 else 1
    bits = "".join(map(str, res.classical_bits))
    return code, _dump(doc), f"bits {bits}, fidelity {res.fidelity:.15f}"


def cmd_superdense(args):
    if len(args.bits) != 2 or any(b not in "01" for b in args.bits):
        raise InputError(f"--bits: expected two binary digits such as 10, got {args.bits!r}")
    sent = (int(args.bits[0]), int(args.bits[1]))
    got = protocols.superdense(sent)
    doc = {"sent": list(sent), "recovered": list(got), "ok": got == sent}
    return (0 if got == sent else 1), _dump(doc), f"sent {args.bits}, recovered {got[0]}{got[1]}"


def cmd_diagram(args):
    if args.file:
        try:
            d = protocols.InfoDiagram.from_json(_read_json(args.file, "file"))
        except protocols.DiagramError as exc:
            raise InputError(f"--file: {exc}") from None
    else:
        d = protocols.builtin_diagrams()[args.builtin]
    try:
        rep = protocols.check_conservation(d)
    except protocols.DiagramError as exc:
        raise InputError(f"--file: {exc}") from None
    doc = {"diagram": d.to_json(), "residuals": rep.residuals, "balanced": rep.passed}
    summary = "all vertices balanced" if rep.passed else f"unbalanced vertices: {sorted(rep.violations)}"
    return (0 if rep.passed else 1), _dump(doc), summary


def cmd_susy(args):
    params = {"cubic": {"c": args.c}}.get(args.potential, {})
    pot = susyqm.get_potential(args.potential, **params)
    try:
        model = susyqm.build_model(pot, args.xmin, args.xmax, args.n)
        pairing = susyqm.pair_spectra(model, args.levels)
    except ValueError as exc:
        msg = str(exc)
        flag = "--n" if "grid" in msg else "--levels" if "level" in msg or "k must" in msg else "--xmin/--xmax"
        raise InputError(f"{flag}: {msg}") from None
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["level", "E0", "E1", "gap"])
    for i, (e0, e1) in enumerate(pairing.pairs):
        w.writerow([i, repr(e0), repr(e1), repr(abs(e0 - e1))])
    for sector, zs in pairing.unpaired.items():
        for z in zs:
            row = ["zero", repr(float(z)), "", ""] if sector == 0 else ["zero", "", repr(float(z)), ""]
            w.writerow(row)
    ok = pairing.max_gap <= args.tol
    return (0 if ok else 1), buf.getvalue(), f"max pairing gap {pairing.max_gap:.3e} over {len(pairing.pairs)} levels"


def cmd_sigma(args):
    L, dx, dt = args.sites, args.dx, args.dt
    try:
        if args.preset == "uniform":
            f = sigma_lattice.uniform(L, dx, dt)
        elif args.preset == "wave":
            f = sigma_lattice.spin_wave(L, dx, dt, mode=args.mode, amplitude=args.amplitude)
        else:
            f = sigma_lattice.random_tangent(L, dx, dt, seed=_seed(args))
    except ValueError as exc:
        raise InputError(f"--dt: {exc}" if "CFL" in str(exc) else str(exc)) from None
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "time", "energy", "max_constraint_residual"])
    worst = 0.0
    for k, state in sigma_lattice.evolve(f, args.steps, args.every):
        res = max(state.constraint_residuals())
        worst = max(worst, res)
        w.writerow([k, repr(k * dt), repr(sigma_lattice.energy(state)), repr(res)])
    ok = worst <= sigma_lattice.CONSTRAINT_TOL
    return (0 if ok else 1), buf.getvalue(), f"{args.steps} steps, max constraint residual {worst:.2e}"


def cmd_decohere(args):
    try:
        params = channels.DecoherenceParams(args.t, args.tau)
    except ValueError as exc:
        flag = "--tau" if "tau" in str(exc) else "--t"
        raise InputError(f"{flag}: {exc}") from None
    rho = _load_state(args, "plus")
    try:
        out = channels.decohere(rho, params)
    except ValueError as exc:
        raise InputError(f"--state: {exc}") from None
    doc = {"t": args.t, "tau": args.tau, "envelope": params.envelope, "density": states.complex_to_json(out.matrix)}
    return 0, _dump(doc), f"off-diagonal envelope {params.envelope:.6g}"


def cmd_bound(args):
    try:
        bits = entropy.holographic_bound_bits(args.area)
    except ValueError as exc:
        raise InputError(f"--area: {exc}") from None
    doc = {"area_m2": args.area, "bits": bits, "planck_length_sq_m2": entropy.PLANCK_LENGTH_SQ}
    return 0, _dump(doc), f"at most {bits:.6e} bits"


def selfcheck_results() -> dict:
    out = {}
    rep = clifford.check_clifford()
    out["clifford"] = {"max_deviation": rep.max_deviation, "passed": rep.passed}
    rep = clifford.check_qubit_field_algebra(clifford.PAULI)
    out["qubit_field_algebra"] = {"max_deviation": rep.max_deviation, "passed": rep.passed}
    rng = np.random.default_rng(20240101)
    worst = max(
        clifford.check_qubit_field_algebra(clifford.rotated_pauli(linalg.random_unitary(2, rng))).max_deviation
        for _ in range(20)
    )
    out["qubit_field_algebra_rotated"] = {"max_deviation": worst, "passed": worst <= 1e-12}
    for name, pot in (("linear", susyqm.linear()), ("tanh", susyqm.tanh_potential()), ("cubic", susyqm.cubic())):
        res = susyqm.superalgebra_residuals(susyqm.build_model(pot, n=64))
        worst = max(res.values())
        out[f"superalgebra_{name}"] = {"max_relative_residual": worst, "passed": worst <= 1e-12}
    sq = susyqm.sqrt_not()
    out["sqrt_not"] = {
        "unitarity_residual": sq.unitarity_residual,
        "square_minus_not": sq.square_minus_not,
        "passed": sq.passed,
    }
    return out


def cmd_selfcheck(args):
    out = selfcheck_results()
    for v in out.values():
        v["passed"] = bool(v["passed"])
    failed = sorted(k for k, v in out.items() if not v["passed"])
    summary = "all identity suites passed" if not failed else f"failed: {', '.join(failed)}"
    return (1 if failed else 0), _dump(out), summary


# --- argument parsing ---------------------------------------------------------


def _add_state_args(p, builtins, default):
    p.add_argument("--state", help="state JSON file ({'amplitudes': [[re, im], ...], 'dims': [...]})")
    p.add_argument("--builtin", choices=builtins, default=None, help=f"built-in state (default {default})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qft-infocalc", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress the human summary line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="von Neumann entropy of a state")
    _add_state_args(p, ["bell", "ghz", "werner"], "bell")
    p.add_argument("--p", type=float, default=0.5, help="Werner mixing weight")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("conditional", help="bipartite conditional entropy, both methods")
    _add_state_args(p, ["bell", "werner"], "bell")
    p.add_argument("--p", type=float, default=0.5, help="Werner mixing weight")
    p.add_argument("--condition-on", type=int, choices=[0, 1], default=1)
    p.set_defaults(func=cmd_conditional)

    p = sub.add_parser("ternary", help="tripartite entropies, chain rule and ternary mutual entropy")
    _add_state_args(p, ["ghz"], "ghz")
    p.set_defaults(func=cmd_ternary)

    p = sub.add_parser("teleport", help="simulate teleportation of one qubit")
    p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default ${SEED_ENV} or 0)")
    p.add_argument("--state", help="qubit JSON file with two amplitudes")
    p.set_defaults(func=cmd_teleport)

    p = sub.add_parser("superdense", help="send two classical bits through one qubit")
    p.add_argument("--bits", required=True, help="two bits, e.g. 10")
    p.set_defaults(func=cmd_superdense)

    p = sub.add_parser("diagram", help="check entropy conservation on an information diagram")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", help="diagram JSON file")
    g.add_argument("--builtin", choices=["fig1", "fig2", "fig3"])
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("susy", help="partner spectra of a discretized superpotential (CSV)")
    p.add_argument("--potential", choices=["linear", "tanh", "cubic"], default="linear")
    p.add_argument("--c", type=float, default=1.0, help="cubic coefficient in v = x^3 - c x")
    p.add_argument("--n", type=int, default=400)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--xmin", type=float, default=-8.0)
    p.add_argument("--xmax", type=float, default=8.0)
    p.add_argument("--tol", type=float, default=susyqm.PAIRING_TOL, help="pairing tolerance")
    p.set_defaults(func=cmd_susy)

    p = sub.add_parser("sigma", help="evolve the lattice O(3) sigma model (CSV)")
    p.add_argument("--preset", choices=list(sigma_lattice.PRESETS), default="wave")
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--dx", type=float, default=1.0)
    p.add_argument("--sites", type=int, default=64)
    p.add_argument("--mode", type=int, default=1, help="wave: Fourier mode number")
    p.add_argument("--amplitude", type=float, default=0.2, help="wave: transverse amplitude")
    p.add_argument("--seed", type=int, default=None, help="random preset seed")
    p.add_argument("--every", type=int, default=1, help="output every N steps")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("decohere", help="exponential decoherence of a qubit density matrix")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--state", help="state JSON file (default equal superposition)")
    p.set_defaults(func=cmd_decohere)

    p = sub.add_parser("bound", help="holographic information bound in bits")
    p.add_argument("--area", type=float, required=True, help="area in square metres")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("selfcheck", help="run the exact-identity suites")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Execute a command and return ``(exit_code, output_document, summary)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        return args.func(args)
    except InputError as exc:
        return 2, "", f"error: {exc}"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, output, summary = run(argv)
    if output:
        sys.stdout.write(output if output.endswith("\n") else output + "\n")
    if summary and "--quiet" not in argv[:1]:
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
