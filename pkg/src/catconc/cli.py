"""Command-line front end.

Every command emits plain data: aligned key/value text, single-line
JSON, or CSV. Figures are opt-in through ``sweep --plot``; nothing is
rendered otherwise. Exit codes: 0 success, 1 verification failure,
2 usage or domain error, 3 convergence warning (result still printed).
"""

from __future__ import annotations

import functools
import json
import sys
from enum import Enum

import click

from .catalysis_closed_form import (
    ConcentrationInstance,
    boost_sweep,
    lqcc_probability,
    optimal_catalyst,
    ratio_profile,
)
from .catalyst_search import SearchConfig, grid_search_rank2, simplex_search_rank_k
from .errors import CatalysisError
from .strategy_planner import compare_strategies, pairwise_distribution
from .verification import run_all


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Output format.",
)


def _num(x: float) -> str:
    return f"{x:.10g}"


def _text(value: object) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _num(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(_text(v) for v in value)
    return str(value)


def _emit_kv(payload: dict, fmt: str) -> None:
    if fmt == OutputFormat.JSON.value:
        click.echo(json.dumps(payload))
        return
    width = max(len(k) for k in payload)
    for key, value in payload.items():
        click.echo(f"{key:<{width}}  {_text(value)}")


def _domain_guard(f):
    """Map library domain errors onto exit code 2 with a message."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except CatalysisError as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


def _reject_csv(fmt: str) -> None:
    if fmt == OutputFormat.CSV.value:
        raise click.UsageError("csv output is only available for sweep and strategy")


def _span(lo: float, hi: float, steps: int) -> list[float]:
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _write_csv(lines: list[str], out: str | None) -> None:
    body = "\n".join(lines) + "\n"
    if out is None:
        click.echo(body, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)
    except OSError as exc:
        raise click.UsageError(f"cannot write {out}: {exc}") from exc


@click.group()
@click.version_option(package_name="catconc")
def main() -> None:
    """Exact success probabilities for catalyzed entanglement concentration."""


@main.command()
@click.option("--alpha", type=float, required=True, help="Larger Schmidt weight of one copy.")
@click.option("--n", "n_copies", type=int, required=True, help="Number of copies.")
@_FORMAT
@_domain_guard
def prob(alpha: float, n_copies: int, fmt: str) -> None:
    """Uncatalyzed probability of concentrating n copies into one Bell pair."""
    _reject_csv(fmt)
    inst = ConcentrationInstance(alpha, n_copies)
    baseline = lqcc_probability(inst)
    deterministic = baseline >= 1.0
    _emit_kv(
        {
            "alpha": alpha,
            "n_copies": n_copies,
            "p_baseline": baseline,
            "deterministic": deterministic,
            "incommensurate": not deterministic,
        },
        fmt,
    )


@main.command()
@click.option("--alpha", type=float, required=True, help="Larger Schmidt weight of one copy.")
@click.option("--n", "n_copies", type=int, required=True, help="Number of copies.")
@click.option("--rank", type=int, default=2, show_default=True, help="Catalyst Schmidt rank.")
@click.option("--search", is_flag=True, help="Optimize numerically instead of in closed form.")
@click.option("--grid-step", type=float, default=1e-4, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--restarts", type=int, default=8, show_default=True)
@click.option("--max-iter", type=int, default=2000, show_default=True)
@_FORMAT
@_domain_guard
def catalyst(
    alpha: float,
    n_copies: int,
    rank: int,
    search: bool,
    grid_step: float,
    seed: int,
    restarts: int,
    max_iter: int,
    fmt: str,
) -> None:
    """Best rank-2 catalyst in closed form, or a numeric rank-k search."""
    _reject_csv(fmt)
    if rank < 2:
        raise click.UsageError(f"rank must be at least 2, got {rank}")
    inst = ConcentrationInstance(alpha, n_copies)
    closed = optimal_catalyst(inst)
    base = {"alpha": alpha, "n_copies": n_copies}
    if closed.deterministic or (rank == 2 and not search):
        # Closed form also covers N = 1, where no catalyst can help.
        _emit_kv(
            base
            | {
                "c_opt": closed.c_opt,
                "p": closed.p_catalyzed,
                "p_baseline": closed.p_baseline,
                "boost": closed.boost,
                "deterministic": closed.deterministic,
            },
            fmt,
        )
        return
    cfg = SearchConfig(
        grid_step=grid_step, max_iterations=max_iter, restarts=restarts, seed=seed
    )
    if rank == 2:
        found = grid_search_rank2(inst, cfg)
        keys: dict = {"c_opt": found.spectrum.entries[0][0]}
    else:
        found = simplex_search_rank_k(inst, rank, cfg)
        keys = {"spectrum": [v for v, m in found.spectrum.entries for _ in range(m)]}
    payload = base | keys | {
        "p": found.probability,
        "p_baseline": closed.p_baseline,
        "boost": found.probability / closed.p_baseline,
        "deterministic": False,
    }
    if not found.converged:
        payload["warning"] = "search did not converge; best point so far reported"
        _emit_kv(payload, fmt)
        sys.exit(3)
    _emit_kv(payload, fmt)


@main.command()
@click.option(
    "--mode",
    type=click.Choice(["ratios", "boost"]),
    required=True,
    help="ratios: monotone ratios against c; boost: optimal boost against alpha.",
)
@click.option("--alpha", type=float, default=None, help="Fixed alpha (ratios mode).")
@click.option(
    "--n",
    "n_values",
    type=int,
    multiple=True,
    default=(2,),
    show_default=True,
    help="Copy counts; repeatable in boost mode.",
)
@click.option("--c-from", type=float, default=0.5, show_default=True)
@click.option("--c-to", type=float, default=0.99, show_default=True)
@click.option("--alpha-from", type=float, default=0.75, show_default=True)
@click.option("--alpha-to", type=float, default=0.995, show_default=True)
@click.option("--steps", type=int, default=50, show_default=True)
@click.option("--out", type=str, default=None, help="CSV destination (default stdout).")
@click.option("--plot", type=str, default=None, help="Also render a figure to this path.")
@_domain_guard
def sweep(
    mode: str,
    alpha: float | None,
    n_values: tuple[int, ...],
    c_from: float,
    c_to: float,
    alpha_from: float,
    alpha_to: float,
    steps: int,
    out: str | None,
    plot: str | None,
) -> None:
    """Tabulate figure data as CSV, one grid point per row."""
    if steps < 1:
        raise click.UsageError(f"steps must be at least 1, got {steps}")
    if mode == "ratios":
        if alpha is None:
            raise click.UsageError("ratios mode needs --alpha")
        if len(n_values) != 1:
            raise click.UsageError("ratios mode takes exactly one --n")
        if not c_from < c_to:
            raise click.UsageError("need --c-from < --c-to")
        inst = ConcentrationInstance(alpha, n_values[0])
        rows = []
        for c in _span(c_from, c_to, steps):
            prof = ratio_profile(inst, c)
            rows.append((alpha, n_values[0], c, prof.r2, prof.r3, prof.r4, prof.minimum))
        lines = ["alpha,n,c,r2,r3,r4,min"]
    else:
        if not alpha_from < alpha_to:
            raise click.UsageError("need --alpha-from < --alpha-to")
        rows = boost_sweep(_span(alpha_from, alpha_to, steps), list(n_values))
        lines = ["alpha,n,boost"]
    lines += [",".join(_num(v) if isinstance(v, float) else str(v) for v in row) for row in rows]
    _write_csv(lines, out)
    if plot is not None:
        from . import plotting

        try:
            if mode == "ratios":
                plotting.save_ratio_figure(rows, plot, alpha, n_values[0])
            else:
                plotting.save_boost_figure(rows, plot)
        except OSError as exc:
            raise click.UsageError(f"cannot write {plot}: {exc}") from exc


@main.command()
@click.option("--alpha", type=float, required=True, help="Larger Schmidt weight of one copy.")
@click.option("--n", "n_copies", type=int, required=True, help="Number of copies (even).")
@click.option("--m", "m_star", type=int, required=True, help="Target number of Bell pairs.")
@_FORMAT
@_domain_guard
def strategy(alpha: float, n_copies: int, m_star: int, fmt: str) -> None:
    """Compare pairwise conversion against the best single-shot partition."""
    outcome = pairwise_distribution(alpha, n_copies)
    report = compare_strategies(alpha, n_copies, m_star)
    plan = report.strategy2_best
    if fmt == OutputFormat.CSV.value:
        lines = ["m,probability"] + [f"{m},{_num(p)}" for m, p in outcome.distribution]
        _write_csv(lines, None)
        return
    if fmt == OutputFormat.JSON.value:
        click.echo(
            json.dumps(
                {
                    "alpha": alpha,
                    "n_copies": n_copies,
                    "m_star": m_star,
                    "p_single": outcome.p_single,
                    "expected_bells": outcome.expected_bells,
                    "distribution": [[m, p] for m, p in outcome.distribution],
                    "strategy1": report.strategy1_exact_m,
                    "strategy1_no_coefficient": report.strategy1_exact_m_no_coefficient,
                    "strategy2": {
                        "sizes": list(plan.sizes),
                        "per_group": list(plan.per_group),
                        "catalysts": list(plan.catalysts),
                        "joint_probability": plan.joint_probability,
                    },
                    "recommended": report.recommended,
                }
            )
        )
        return
    _emit_kv(
        {
            "alpha": alpha,
            "n_copies": n_copies,
            "m_star": m_star,
            "p_single": outcome.p_single,
            "expected_bells": outcome.expected_bells,
        },
        fmt,
    )
    click.echo("distribution:")
    for m, p in outcome.distribution:
        click.echo(f"  m={m}  {_num(p)}")
    _emit_kv(
        {
            "strategy1": report.strategy1_exact_m,
            "strategy1_no_coefficient": report.strategy1_exact_m_no_coefficient,
            "strategy2_sizes": plan.sizes,
            "strategy2_per_group": plan.per_group,
            "strategy2_catalysts": plan.catalysts,
            "strategy2_joint": plan.joint_probability,
            "recommended": report.recommended,
        },
        fmt,
    )


@main.command()
@click.option("--grid-density", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@_domain_guard
def verify(grid_density: int, seed: int) -> None:
    """Cross-check closed forms against the explicit-spectrum oracle."""
    if grid_density < 1:
        raise click.UsageError(f"grid density must be at least 1, got {grid_density}")
    results = run_all(grid_density=grid_density, seed=seed)
    for res in results:
        click.echo(f"{res.name}: {res.passed}/{res.total} {'pass' if res.ok else 'FAIL'}")
    if not all(res.ok for res in results):
        sys.exit(1)


if __name__ == "__main__":
    main()
