#!/usr/bin/env python3
"""
CLI interface for nonvanishing.
"""

import functools
import logging
import sys
from typing import Optional

import click

from .cohomology import regularity_contradiction_demo, theorem_nonvan1, theorem_nonvan2
from .codec import render_json
from .dossier import build_dossier, run_checks, search_dossiers, witness_dict
from .errors import InvalidArgument, NonvanishingError, exit_code_for
from .params import fiber_genus, omega_x_is_ample, validate
from .pushforward import refute_erroneous
from .report_writer import (
    generate_html,
    render_contradiction_text,
    render_dossier_text,
    render_refutation_text,
    save_html,
)
from .utils import load_config


def handle_errors(command):
    """Print `ClassName: message` on stderr and exit with the mapped status."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except NonvanishingError as exc:
            click.echo(f"{type(exc).__name__}: {exc}", err=True)
            sys.exit(exit_code_for(exc))

    return wrapper


def params_options(command):
    """Attach the --p/--g/--l options shared by the per-params commands."""
    command = click.option('--l', 'l', type=int, required=True, help='Cyclic cover degree')(command)
    command = click.option('--g', 'g', type=int, required=True, help='Genus of the Tango curve')(command)
    command = click.option('--p', 'p', type=int, required=True, help='Characteristic (prime)')(command)
    return command


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='YAML configuration file')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on stderr')
@click.version_option(package_name='nonvanishing')
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool):
    """nonvanishing - exact checks of Kodaira nonvanishing on cyclic covers"""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr)
    ctx.obj = load_config(config_path)


@cli.command('validate')
@params_options
@handle_errors
def validate_cmd(p: int, g: int, l: int):
    """Check parameters and print the derived scalars."""
    params = validate(p, g, l)
    click.echo(f"valid {params}")
    click.echo(f"  deg L = {params.deg_L}")
    click.echo(f"  deg N = {params.deg_N}")
    click.echo(f"  m     = {params.m}")
    click.echo(f"  fiber genus = {fiber_genus(params)}")
    click.echo(f"  omega_X ample = {'yes' if omega_x_is_ample(params) else 'not guaranteed'}")


@cli.command()
@params_options
@click.option('--json', 'as_json', is_flag=True, help='Emit the dossier as JSON')
@click.option('--html', 'html_path', type=click.Path(dir_okay=False), help='Also write an HTML dossier')
@click.option('--beyond-range', is_flag=True, help='Scan for witnesses outside the proven ranges')
@click.pass_obj
@handle_errors
def report(config: dict, p: int, g: int, l: int, as_json: bool, html_path: Optional[str], beyond_range: bool):
    """Build the counterexample dossier for one parameter set."""
    params = validate(p, g, l)
    config = dict(config, beyond_range=config['beyond_range'] or beyond_range)
    dossier = build_dossier(params, config)

    if as_json:
        click.echo(render_json(dossier))
    else:
        click.echo(render_dossier_text(dossier), nl=False)

    if html_path:
        save_html(generate_html(dossier, config['html_style']), html_path)
        click.echo(f"HTML dossier written to {html_path}", err=True)


@cli.command()
@click.option('--max-p', type=click.IntRange(min=2), required=True, help='Largest characteristic')
@click.option('--max-g', type=click.IntRange(min=2), required=True, help='Largest genus')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON array of dossiers')
@click.option('--beyond-range', is_flag=True, help='Scan for witnesses outside the proven ranges')
@click.pass_obj
@handle_errors
def search(config: dict, max_p: int, max_g: int, as_json: bool, beyond_range: bool):
    """Emit one dossier per valid parameter set."""
    config = dict(config, beyond_range=config['beyond_range'] or beyond_range)
    dossiers = list(search_dossiers(max_p, max_g, config))

    if as_json:
        click.echo(render_json(dossiers))
        click.echo(f"{len(dossiers)} candidates", err=True)
        return

    for dossier in dossiers:
        click.echo(render_dossier_text(dossier))
    click.echo(f"{len(dossiers)} candidates")


@cli.command()
@params_options
@click.option('--k', 'k', type=int, default=2, show_default=True, help='Order of the thickening')
@handle_errors
def refute(p: int, g: int, l: int, k: int):
    """Compare chi(O_kEt) with chi(O_kE) and both pushforward formulas."""
    params = validate(p, g, l)
    click.echo(render_refutation_text(refute_erroneous(k, params)), nl=False)


@cli.command()
@params_options
@click.option('--n', 'n', type=int, help='Power of Z^-1')
@click.option('--a', 'a', type=int, help='Et coefficient of Z_(a,b)')
@click.option('--b', 'b', type=int, help='N exponent of Z_(a,b)')
@handle_errors
def witness(p: int, g: int, l: int, n: Optional[int], a: Optional[int], b: Optional[int]):
    """Certify one instance of a nonvanishing theorem."""
    params = validate(p, g, l)
    if n is not None and a is None and b is None:
        found = theorem_nonvan1(n, params)
    elif n is None and a is not None and b is not None:
        found = theorem_nonvan2(a, b, params)
    else:
        raise InvalidArgument("give either --n or both --a and --b")

    for key, value in witness_dict(found).items():
        click.echo(f"{key}: {value}")


@cli.command()
@click.option('--p', 'p', type=int, default=5, show_default=True)
@click.option('--g', 'g', type=int, default=16, show_default=True)
@click.option('--l', 'l', type=int, default=6, show_default=True)
@click.option('--a', 'a', type=int, default=6, show_default=True)
@click.option('--b', 'b', type=int, default=3, show_default=True)
@click.option('--k', 'k', type=int, help='Power of Z_(a,b); defaults to p - 1')
@handle_errors
def regular(p: int, g: int, l: int, a: int, b: int, k: Optional[int]):
    """Show the regularity contradiction the erroneous formula leads to."""
    params = validate(p, g, l)
    click.echo(render_contradiction_text(regularity_contradiction_demo(params, a, b, k)), nl=False)


@cli.command()
@click.option('--max-p', type=click.IntRange(min=2), default=50, show_default=True)
@click.option('--max-g', type=click.IntRange(min=2), default=500, show_default=True)
@click.option('--max-k', type=click.IntRange(min=2), help='Bound for the Euler characteristic oracle')
@click.pass_obj
@handle_errors
def check(config: dict, max_p: int, max_g: int, max_k: Optional[int]):
    """Run every acceptance check over the parameter sweep."""
    results = run_checks(max_p, max_g, max_k or config['max_k'], config['max_thickening_k'])
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"[{status}] {result.number:2d} {result.name}: {result.detail}")

    failed = [r for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        sys.exit(2)


if __name__ == '__main__':
    cli()
