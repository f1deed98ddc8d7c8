# main.py
import sys

import click

from app.routers.bilinear import router as bilinear_router
from app.routers.checks import router as checks_router
from app.routers.dual import router as dual_router
from app.routers.matrix import router as matrix_router
from app.routers.quadratic import router as quadratic_router
from app.utils.errors import SupertropError


class SupertropCLI(click.CommandCollection):
    """Merges the routers; library errors become `error: <detail>` and their exit code."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except SupertropError as e:
            click.echo(f"error: {e.detail}", err=True)
            ctx.exit(e.exit_code)


cli = SupertropCLI(
    name="supertrop",
    help="Exact supertropical linear algebra: matrices, dual bases, bilinear and quadratic forms.",
    sources=[matrix_router, dual_router, bilinear_router, quadratic_router, checks_router],
)


if __name__ == "__main__":
    sys.exit(cli())
