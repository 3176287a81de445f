"""Command-line interface.

Every command echoes its resolved configuration as a ``# config`` line on
stdout, writes deterministic output files (LF endings, comma separators,
full-precision JSON), and exits 0 only if the run succeeded and every
requested pass/fail check passed. Table output is rounded to 4 decimals for
display; JSON always carries full double precision.
"""
from __future__ import annotations

import json
import os
import sys

import click
import numpy as np

from . import __version__, bases, graphs, io, norms, operators
from .errors import GraphSignalError
from .exponents import Exponent
from .fourier import Signal, gft, igft
from .spaces import ScalarField

DEFAULT_P_LIST = "1,1.5,2,3,4,20,inf"
BASIS_CHOICES = ("A", "L", "NL", "DFT")


def _echo_config(command: str, params: dict) -> None:
    cfg = {"command": command}
    cfg.update({k: v for k, v in params.items() if v is not None})
    click.echo("# config " + json.dumps(cfg, sort_keys=True, default=str))


def _parse_p_list(text: str):
    return [Exponent(tok) for tok in text.split(",") if tok.strip()]


def _build_graph(family: str, n: int, directed: bool) -> graphs.Graph:
    if n < 1:
        raise click.UsageError("--n must be at least 1")
    try:
        return graphs.standard_graph(family, n, directed)
    except (ValueError, GraphSignalError) as exc:
        raise click.ClickException(str(exc))


def _resolve_basis(basis_spec: str, family: str, n: int, directed: bool,
                   tol: float) -> tuple[bases.OrthonormalBasis, str]:
    try:
        if basis_spec.startswith("file:"):
            path = basis_spec[len("file:"):]
            loaded = io.load_basis(path)
            return bases.from_matrix(loaded.matrix, tol=tol), path
        if basis_spec == "DFT":
            return bases.dft_basis(n), "DFT"
        if basis_spec in ("A", "L", "NL"):
            graph = _build_graph(family, n, directed)
            matrix = {"A": graphs.adjacency, "L": graphs.laplacian,
                      "NL": graphs.normalized_laplacian}[basis_spec](graph)
            return bases.eigenbasis(matrix), basis_spec
        raise click.UsageError(
            f"--basis must be one of {BASIS_CHOICES} or file:PATH, got {basis_spec!r}")
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))


def _load_signal(path: str) -> Signal:
    try:
        return io.load_signal(path)
    except (OSError, KeyError, ValueError, GraphSignalError) as exc:
        raise click.ClickException(f"cannot load signal {path}: {exc}")


def _write_output(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        io.write_text(text, out)
    else:
        click.echo(text, nl=False)


def graph_options(fn):
    fn = click.option("--graph", "family", default="path",
                      type=click.Choice(graphs.FAMILIES), show_default=True,
                      help="graph family for matrix-derived bases")(fn)
    fn = click.option("--n", default=4, show_default=True, help="vertex count")(fn)
    fn = click.option("--directed", is_flag=True, help="directed variant (cycle only)")(fn)
    return fn


def basis_option(fn):
    return click.option("--basis", "basis_spec", default="L", show_default=True,
                        help="basis source: A | L | NL | DFT | file:PATH")(fn)


def out_options(fn):
    fn = click.option("--out", default=None, type=click.Path(), help="output path (stdout if omitted)")(fn)
    fn = click.option("--format", "fmt", default=None,
                      type=click.Choice(("csv", "json")), help="output format")(fn)
    return fn


@click.group()
@click.version_option(version=__version__, prog_name="vvgsp")
def main():
    """Graph signal processing for vector-valued signals."""


@main.command()
@graph_options
@click.option("--out", "out_dir", required=True, type=click.Path(), help="output directory")
def matrices(family, n, directed, out_dir):
    """Emit the adjacency, degree, Laplacian and normalized Laplacian as CSV."""
    _echo_config("matrices", {"graph": family, "n": n, "directed": directed, "out": out_dir})
    graph = _build_graph(family, n, directed)
    os.makedirs(out_dir, exist_ok=True)
    io.write_text(io.matrix_to_csv(graphs.adjacency(graph)), os.path.join(out_dir, "A.csv"))
    if graph.directed:
        click.echo("# note: degree and Laplacian matrices are undefined for directed graphs; emitted A only")
        return
    io.write_text(io.matrix_to_csv(graphs.degree_matrix(graph)), os.path.join(out_dir, "D.csv"))
    io.write_text(io.matrix_to_csv(graphs.laplacian(graph)), os.path.join(out_dir, "L.csv"))
    try:
        io.write_text(io.matrix_to_csv(graphs.normalized_laplacian(graph)),
                      os.path.join(out_dir, "NL.csv"))
    except GraphSignalError as exc:
        click.echo(f"# note: normalized Laplacian skipped: {exc}")


@main.command("coherence-table")
@graph_options
@click.option("--bases", "basis_list", default="A,L,NL,DFT", show_default=True,
              help="comma-separated basis sources")
@click.option("--p", "p_list", default=DEFAULT_P_LIST, show_default=True,
              help="comma-separated exponents")
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True,
              help="unitarity tolerance for file-loaded bases")
@out_options
def coherence_table(family, n, directed, basis_list, p_list, tol, out, fmt):
    """Column-coherence table kappa_p, one row per basis (4-decimal display)."""
    _echo_config("coherence-table", {"graph": family, "n": n, "directed": directed,
                                     "bases": basis_list, "p": p_list, "out": out,
                                     "format": fmt})
    specs = [tok.strip() for tok in basis_list.split(",") if tok.strip()]
    exponents = _parse_p_list(p_list)
    if not specs or not exponents:
        raise click.UsageError("need at least one basis and one exponent")
    rows = []
    for spec in specs:
        basis, label = _resolve_basis(spec, family, n, directed, tol)
        rows.append((label, [norms.coherence(basis, p) for p in exponents]))
    if fmt == "json":
        obj = {"p": [str(p) for p in exponents],
               "rows": {label: values for label, values in rows}}
        _write_output(obj, out)
        return
    header = "basis," + ",".join(f"p={p}" for p in exponents)
    lines = [header] + [label + "," + ",".join(f"{v:.4f}" for v in values)
                        for label, values in rows]
    text = "\n".join(lines) + "\n"
    if out:
        io.write_text(text, out)
    else:
        click.echo(text, nl=False)


@main.command()
@graph_options
@basis_option
@click.option("--space", "space_json", default='{"kind": "finite_dim", "dim": 1, "p": "2", "field": "real"}',
              show_default=True, help="value-space descriptor as JSON")
@click.option("--p", default="2", show_default=True)
@click.option("--q", default="2", show_default=True)
@click.option("--samples", default=1000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def opnorm(family, n, directed, basis_spec, space_json, p, q, samples, seed, tol, out):
    """Operator norm of the transform from L^p to L^q: bound, exactness,
    witness ratio, and an empirical lower bound."""
    _echo_config("opnorm", {"graph": family, "n": n, "directed": directed,
                            "basis": basis_spec, "space": space_json, "p": p, "q": q,
                            "samples": samples, "seed": seed, "out": out})
    basis, label = _resolve_basis(basis_spec, family, n, directed, tol)
    try:
        space = io.space_from_json_dict(json.loads(space_json))
    except (ValueError, KeyError) as exc:
        raise click.UsageError(f"bad --space descriptor: {exc}")
    try:
        report = norms.fourier_opnorm(basis, space, p, q)
        empirical = norms.empirical_opnorm(basis, space, p, q, samples=samples, seed=seed)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    witness_ratio = None
    if report.witness is not None:
        witness_ratio = (norms.signal_norm(gft(report.witness, basis), q)
                         / norms.signal_norm(report.witness, p))
    ok = empirical <= report.bound + 1e-9
    obj = {"basis": label, "p": str(Exponent(p)), "q": str(Exponent(q)),
           "space": json.loads(space_json), "bound": report.bound,
           "exact": report.exact, "formula": report.formula,
           "witness_ratio": witness_ratio, "empirical_lower_bound": empirical,
           "samples": samples, "seed": seed, "check_passed": ok}
    _write_output(obj, out)
    if not ok:
        raise click.ClickException(
            f"empirical lower bound {empirical} exceeds theoretical bound {report.bound}")


@main.command()
@graph_options
@basis_option
@click.option("--variant", required=True,
              type=click.Choice(("p-to-inf", "one-to-q", "p-to-q")),
              help="which localization bound to compute")
@click.option("--p", default=None)
@click.option("--q", default=None)
@click.option("--signal", "signal_path", default=None, type=click.Path(exists=True),
              help="optional signal to check against the bound")
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def uncertainty(family, n, directed, basis_spec, variant, p, q, signal_path, tol, out):
    """Uncertainty lower bound for a localization ratio, optionally checked
    against a concrete signal."""
    _echo_config("uncertainty", {"graph": family, "n": n, "directed": directed,
                                 "basis": basis_spec, "variant": variant, "p": p,
                                 "q": q, "signal": signal_path, "out": out})
    basis, label = _resolve_basis(basis_spec, family, n, directed, tol)
    key = variant.replace("-", "_")
    try:
        bound = norms.uncertainty_bound(basis, key, p=p, q=q)
    except (ValueError, GraphSignalError) as exc:
        raise click.UsageError(str(exc))
    obj = {"basis": label, "variant": variant, "p": p, "q": q, "bound": bound}
    passed = True
    if signal_path:
        f = _load_signal(signal_path)
        num_p = Exponent(p) if variant != "one-to-q" else Exponent(1)
        den_q = Exponent(q) if variant != "p-to-inf" else Exponent("inf")
        try:
            ratio = norms.uncertainty_ratio(f, basis, num_p, den_q)
        except GraphSignalError as exc:
            raise click.ClickException(str(exc))
        passed = ratio >= bound - 1e-9
        obj.update({"ratio": ratio, "check_passed": passed})
    _write_output(obj, out)
    if not passed:
        raise click.ClickException(f"ratio {obj['ratio']} fell below the bound {bound}")


@main.command("gft")
@graph_options
@basis_option
@click.option("--signal", "signal_path", required=True, type=click.Path(exists=True))
@click.option("--inverse", is_flag=True, help="apply the inverse transform instead")
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
@click.option("--components-csv", default=None, type=click.Path(),
              help="also emit per-component plot data (vertex index vs value)")
def gft_cmd(family, n, directed, basis_spec, signal_path, inverse, tol, out, components_csv):
    """Transform a signal file to the frequency domain (JSON, plus optional
    per-component CSV plot data)."""
    _echo_config("gft", {"graph": family, "n": n, "directed": directed,
                         "basis": basis_spec, "signal": signal_path, "inverse": inverse,
                         "out": out, "components_csv": components_csv})
    f = _load_signal(signal_path)
    basis, _ = _resolve_basis(basis_spec, family, f.n, directed, tol)
    if basis.field is ScalarField.COMPLEX and f.space.field is ScalarField.REAL:
        click.echo("# note: real-valued signal promoted to complex coordinates")
    try:
        result = igft(f, basis) if inverse else gft(f, basis)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    _write_output(io.signal_to_json_dict(result), out)
    if components_csv:
        io.write_text(_components_csv(result), components_csv)


def _components_csv(f: Signal) -> str:
    complex_valued = np.iscomplexobj(f.coords)
    if complex_valued:
        header = "index," + ",".join(
            f"c{j + 1}_re,c{j + 1}_im" for j in range(f.space.dim))
    else:
        header = "index," + ",".join(f"c{j + 1}" for j in range(f.space.dim))
    lines = [header]
    for idx, row in enumerate(f.coords, start=1):
        cells = []
        for v in row:
            if complex_valued:
                cells += [repr(float(v.real)), repr(float(v.imag))]
            else:
                cells.append(repr(float(v)))
        lines.append(f"{idx}," + ",".join(cells))
    return "\n".join(lines) + "\n"


@main.group("operators")
def operators_cmd():
    """Convolution and translation operator commands."""


@operators_cmd.command("convolve")
@graph_options
@basis_option
@click.option("--alpha", "alpha_path", required=True, type=click.Path(exists=True))
@click.option("--signal", "signal_path", required=True, type=click.Path(exists=True))
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def op_convolve(family, n, directed, basis_spec, alpha_path, signal_path, tol, out):
    """Spectral-domain convolution of a scalar signal with a signal file."""
    _echo_config("operators convolve", {"graph": family, "n": n, "directed": directed,
                                        "basis": basis_spec, "alpha": alpha_path,
                                        "signal": signal_path, "out": out})
    f = _load_signal(signal_path)
    alpha = io.load_scalar_signal(alpha_path)
    basis, _ = _resolve_basis(basis_spec, family, f.n, directed, tol)
    try:
        result = operators.convolve(alpha, f, basis)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    _write_output(io.signal_to_json_dict(result), out)


@operators_cmd.command("translate")
@graph_options
@basis_option
@click.option("--m", required=True, type=int, help="target vertex (1-based)")
@click.option("--signal", "signal_path", required=True, type=click.Path(exists=True))
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def op_translate(family, n, directed, basis_spec, m, signal_path, tol, out):
    """Translate a signal file to vertex m."""
    _echo_config("operators translate", {"graph": family, "n": n, "directed": directed,
                                         "basis": basis_spec, "m": m,
                                         "signal": signal_path, "out": out})
    f = _load_signal(signal_path)
    basis, _ = _resolve_basis(basis_spec, family, f.n, directed, tol)
    try:
        result = operators.translate(m, f, basis)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    _write_output(io.signal_to_json_dict(result), out)


@operators_cmd.command("analyze-translation")
@graph_options
@basis_option
@click.option("--m", default=None, type=int, help="vertex to analyze (all if omitted)")
@click.option("--banach", is_flag=True, help="skip Hilbert-only induced norms")
@click.option("--tol", default=operators.ZERO_TOL, show_default=True,
              help="zero tolerance for kernel membership")
@click.option("--out", default=None, type=click.Path())
def op_analyze(family, n, directed, basis_spec, m, banach, tol, out):
    """Kernel indices, invertibility, induced norms and the isometry condition
    of the translation operator."""
    _echo_config("operators analyze-translation",
                 {"graph": family, "n": n, "directed": directed, "basis": basis_spec,
                  "m": m, "banach": banach, "out": out})
    basis, _ = _resolve_basis(basis_spec, family, n, directed, bases.UNITARITY_TOL)
    vertices = [m] if m is not None else list(range(1, basis.n + 1))
    try:
        reports = [operators.analyze_translation(v, basis, hilbert=not banach,
                                                 zero_tol=tol).to_json_dict()
                   for v in vertices]
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    _write_output(reports[0] if m is not None else {"analyses": reports}, out)


@operators_cmd.command("invert-translation")
@graph_options
@basis_option
@click.option("--m", required=True, type=int)
@click.option("--signal", "signal_path", required=True, type=click.Path(exists=True))
@click.option("--tol", default=operators.ZERO_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def op_invert(family, n, directed, basis_spec, m, signal_path, tol, out):
    """Apply the inverse translation; fails if any u_k(m) vanishes. The output
    includes the conditioning ratio max/min |u_k(m)|."""
    _echo_config("operators invert-translation",
                 {"graph": family, "n": n, "directed": directed, "basis": basis_spec,
                  "m": m, "signal": signal_path, "out": out})
    g = _load_signal(signal_path)
    basis, _ = _resolve_basis(basis_spec, family, g.n, directed, bases.UNITARITY_TOL)
    try:
        result = operators.translation_inverse(m, g, basis, zero_tol=tol)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    analysis = operators.analyze_translation(m, basis, zero_tol=tol)
    obj = io.signal_to_json_dict(result)
    obj["condition_indicator"] = analysis.induced_norm * analysis.induced_inverse_norm
    _write_output(obj, out)


@operators_cmd.command("adjoint")
@graph_options
@basis_option
@click.option("--m", required=True, type=int)
@click.option("--signal", "signal_path", required=True, type=click.Path(exists=True))
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def op_adjoint(family, n, directed, basis_spec, m, signal_path, tol, out):
    """Apply the adjoint of the translation (Hilbert value spaces only)."""
    _echo_config("operators adjoint", {"graph": family, "n": n, "directed": directed,
                                       "basis": basis_spec, "m": m,
                                       "signal": signal_path, "out": out})
    g = _load_signal(signal_path)
    basis, _ = _resolve_basis(basis_spec, family, g.n, directed, tol)
    try:
        result = operators.translation_adjoint(m, g, basis)
    except GraphSignalError as exc:
        raise click.ClickException(str(exc))
    _write_output(io.signal_to_json_dict(result), out)


@operators_cmd.command("young-bound")
@graph_options
@basis_option
@click.option("--p", default="2", show_default=True)
@click.option("--q", default="2", show_default=True)
@click.option("--r", default="2", show_default=True)
@click.option("--grid-size", default=1, show_default=True)
@click.option("--tol", default=bases.UNITARITY_TOL, show_default=True)
@click.option("--out", default=None, type=click.Path())
def op_young(family, n, directed, basis_spec, p, q, r, grid_size, tol, out):
    """Certified upper bound for the bilinear convolution norm."""
    _echo_config("operators young-bound",
                 {"graph": family, "n": n, "directed": directed, "basis": basis_spec,
                  "p": p, "q": q, "r": r, "grid_size": grid_size, "out": out})
    basis, label = _resolve_basis(basis_spec, family, n, directed, tol)
    try:
        bound = operators.young_bound(basis, p, q, r, grid_size=grid_size)
    except (ValueError, GraphSignalError) as exc:
        raise click.UsageError(str(exc))
    _write_output({"basis": label, "p": str(Exponent(p)), "q": str(Exponent(q)),
                   "r": str(Exponent(r)), "grid_size": grid_size, "bound": bound}, out)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
