# app/routers/checks.py
import click

from app.core import suites
from app.models.enums import OutputFormat
from app.routers.common import common_options
from app.schemas.report import TrialReport
from app.utils.config import get_settings
from app.utils.errors import CounterexampleError

router = click.Group(name="checks", help="Seeded property suites.")


def _print(report: TrialReport, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.json:
        click.echo(report.to_json())
        return
    colour = "green" if report.passed else "red"
    verdict = click.style(report.verdict.value, fg=colour)
    click.echo(f"{report.suite}: {verdict} ({report.trials} trials, seed {report.seed})")
    for f in report.failures:
        click.echo(f"  #{f.index}: expected {f.expected}; got {f.got}\n    input: {f.input}")


@router.command("check")
@click.argument("name", type=click.Choice(suites.suite_names() + ["all"]))
@click.option("--trials", type=click.IntRange(min=1), default=None,
              help="Trials per suite; each suite has its own default.")
@click.option("--seed", type=int, default=None, help="Defaults to SUPERTROP_SEED (7).")
@common_options
def check(name, trials, seed, fmt, inline):
    """Run suite NAME (or all of them); exit 3 on a counterexample."""
    seed = get_settings().seed if seed is None else seed
    reports = suites.run_all(trials, seed) if name == "all" else [suites.run_suite(name, trials, seed)]
    for report in reports:
        _print(report, fmt)
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        raise CounterexampleError(f"counterexample found by {', '.join(failed)}")
