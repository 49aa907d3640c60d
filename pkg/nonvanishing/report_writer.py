"""
Text and HTML rendering for nonvanishing.

Text output is markdown, so the HTML dossier is the same text run through
`markdown` plus the pygments-highlighted JSON dossier.
"""

from typing import Any, Dict

import markdown
from jinja2 import BaseLoader, Environment
from pygments import highlight
from pygments.formatters import HtmlFormatter
from pygments.lexers import JsonLexer

from .codec import render_json
from .cohomology import ContradictionReport
from .pushforward import RefutationReport


DOSSIER_TEMPLATE = """\
# Counterexample dossier (p={{ d.params.p }}, g={{ d.params.g }}, l={{ d.params.l }})

{% if d.flags.conditional_on_tango_curve -%}
Every statement below is conditional on a Tango curve of genus {{ d.params.g }} existing in characteristic {{ d.params.p }}.
{%- endif %}

## Invariants

{% set inv = d.invariants -%}
- deg L = {{ inv.deg_L }}, deg N = {{ inv.deg_N }}, m = {{ inv.m }}
- (Et.Et) = {{ inv.et_self_intersection }}
- K_X = {{ inv.canonical_class.display }}, (K_X.K_X) = {{ inv.canonical_self_intersection }}
- chi(O_X) = {{ inv.chi_structure_sheaf }}
- fibers: genus {{ inv.fiber_genus }}, (K_X.F) = {{ inv.fiber_canonical_degree }}, cusp x^{{ inv.fiber_singularity[0] }} = y^{{ inv.fiber_singularity[1] }}
- omega_X ample: {{ "yes" if inv.omega_x_ample else "not guaranteed" }}

## Nonvanishing

{% for entry in d.nonvanishing -%}
{% if entry.kind == "nonvan1" -%}
- [{{ entry.theorem }}] n = {{ entry.n }}: {{ witness_line(entry.witness) }}
{% elif entry.witness is none -%}
- [{{ entry.theorem }}] (a, b) = ({{ entry.a_b[0] }}, {{ entry.a_b[1] }}): no certificate, the designated summand is zero ({{ entry.status }})
{% else -%}
- [{{ entry.theorem }}] (a, b) = ({{ entry.a_b[0] }}, {{ entry.a_b[1] }}): {{ witness_line(entry.witness) }}
{% endif -%}
{% endfor %}
## Non-nef direct image of omega_X/C

{% set nef = d.nef_failure -%}
Summand {{ nef.summand_index }} of phi_*omega_X/C is the quotient {{ nef.quotient_bundle.display }}; its pairing with the {{ nef.test_curve }} is {{ nef.pairing_value }}.

{% for s in d.relative_dualizing -%}
- i = {{ s.index }}: {{ s.bundle.display }} ({{ s.provenance }})
{% endfor %}
## Kollar vanishing fails

{% for step in d.kollar.quotient_chain -%}
- {{ step }}
{% endfor %}
## Refutation at k = {{ d.refutation.k }}

- chi(O_{{ d.refutation.k }}Et) = {{ d.refutation.chi_cover }}
- chi(O_{{ d.refutation.k }}E) = {{ d.refutation.chi_base }}
- verdict: {{ d.refutation.verdict | upper }} (difference {{ d.refutation.difference }})
{% if d.beyond_range is defined %}
## Beyond Theorem range (candidates, not theorems)

{% for entry in d.beyond_range -%}
{% if entry.kind == "nonvan1" -%}
- n = {{ entry.n }}: {{ entry.witnesses | length }} witness(es), first {{ witness_line(entry.witnesses[0]) }}
{% else -%}
- (a, b) = ({{ entry.a_b[0] }}, {{ entry.a_b[1] }}): {{ entry.witnesses | length }} witness(es), first {{ witness_line(entry.witnesses[0]) }}
{% endif -%}
{% else -%}
- none found
{% endfor %}
{%- endif %}
"""


REFUTATION_TEMPLATE = """\
Refutation of the erroneous pushforward on {{ r.params }} at k = {{ r.k }}

corrected: {{ r.corrected.labels | join(" + ") }}
  sum chi = {{ r.corrected_chi }}, forces chi(O_{{ r.k }}Et) = {{ r.corrected_quotient_chi }}
erroneous: {{ r.erroneous.labels | join(" + ") }}
  sum chi = {{ r.erroneous_chi }}, forces chi(O_{{ r.k }}Et) = {{ r.erroneous_quotient_chi }}

chi(O_{{ r.k }}Et) = {{ r.chi_cover }}
chi(O_{{ r.k }}E)  = {{ r.chi_base }}
difference = {{ r.difference }}
decompositions differ: {{ "yes" if r.decompositions_differ else "no" }}
verdict: {{ r.verdict | upper }}
"""


CONTRADICTION_TEMPLATE = """\
Regularity check on {{ c.params }} for Z_({{ c.a }},{{ c.b }})^{{ c.k }} (x) omega_X^-1

twist class: {{ c.twist.describe() }}
passes ampleness check: {{ "yes" if c.twist_ample else "no" }}
coefficients at k = p - 1: Et {{ c.remark_coefficients[0] }}, base degree {{ c.remark_coefficients[1] }}

erroneous pushforward witnesses:
{% for w in c.erroneous_witnesses -%}
  summand {{ w.index }}: {{ w.bundle }} [{{ w.rule }}]
{% else -%}
  none
{% endfor -%}
corrected pushforward witnesses:
{% for w in c.corrected_witnesses -%}
  summand {{ w.index }}: {{ w.bundle }} [{{ w.rule }}]
{% else -%}
  none
{% endfor %}
{% if c.contradiction -%}
CONTRADICTION: the erroneous formula gives H^1 != 0 for an ample twist, so X would not be regular.
{% else -%}
no contradiction
{% endif -%}
corrected theorems: Et coefficient and base degree never both positive on the proven range: {{ "yes" if c.never_both_positive else "no" }}
"""


HTML_TEMPLATE = """
<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{{ title }}</title>
    <style>
        :root {
            --bg: #181a1b;
            --panel: #23272e;
            --text: #e8e6e3;
            --accent: #4f8cff;
            --border: #333a41;
        }
        html, body {
            background: var(--bg);
            color: var(--text);
            font-family: 'Fira Mono', 'Menlo', 'Consolas', 'Liberation Mono', monospace, sans-serif;
            margin: 0;
            padding: 0;
        }
        .container {
            max-width: 1200px;
            margin: 0 auto;
            background: var(--panel);
            border-radius: 12px;
            padding: 16px 32px 32px 32px;
        }
        h1, h2 {
            color: var(--accent);
            font-weight: 500;
            border-bottom: 2px solid var(--border);
            padding-bottom: 6px;
        }
        .code-block {
            border: 1px solid var(--border);
            border-radius: 8px;
            padding: 18px;
            overflow-x: auto;
        }
    </style>
</head>
<body>
    <div class="container">
        {{ body | safe }}
        <h2>Dossier JSON</h2>
        <div class="code-block">
            {{ highlighted_json | safe }}
        </div>
    </div>
</body>
</html>
"""


def _witness_line(witness: Dict[str, Any]) -> str:
    relation = witness["identity_relation"]
    return (
        f"h^1 >= {witness['h1_lower_bound']} from summand {witness['index']}: "
        f"{witness['display']} [{witness['rule']}, {witness['identity_lhs']} {relation} {witness['identity_rhs']}]"
    )


def _environment(autoescape: bool = False) -> Environment:
    env = Environment(loader=BaseLoader(), autoescape=autoescape, keep_trailing_newline=True)
    env.globals['witness_line'] = _witness_line
    return env


def render_dossier_text(dossier: Dict[str, Any], autoescape: bool = False) -> str:
    """
    Render a dossier as markdown text.

    Args:
        dossier: Dossier built by `build_dossier`
        autoescape: Escape values for embedding in HTML

    Returns:
        str: Markdown text
    """
    return _environment(autoescape).from_string(DOSSIER_TEMPLATE).render(d=dossier)


def render_refutation_text(report: RefutationReport) -> str:
    return _environment().from_string(REFUTATION_TEMPLATE).render(r=report)


def render_contradiction_text(report: ContradictionReport) -> str:
    return _environment().from_string(CONTRADICTION_TEMPLATE).render(c=report)


def highlight_json(text: str, style: str = 'monokai') -> str:
    """
    Apply syntax highlighting to a JSON document.

    Args:
        text: JSON source
        style: Pygments style name

    Returns:
        str: HTML with syntax highlighting
    """
    formatter = HtmlFormatter(style=style, noclasses=True, nobackground=True)
    return highlight(text, JsonLexer(), formatter)


def generate_html(dossier: Dict[str, Any], style: str = 'monokai') -> str:
    """
    Generate a standalone HTML page for a dossier.

    Args:
        dossier: Dossier built by `build_dossier`
        style: Pygments style for the JSON block

    Returns:
        str: Generated HTML content
    """
    params = dossier['params']
    template_vars = {
        'title': f"Dossier p={params['p']}, g={params['g']}, l={params['l']}",
        'body': markdown.markdown(render_dossier_text(dossier, autoescape=True)),
        'highlighted_json': highlight_json(render_json(dossier), style),
    }

    env = Environment(loader=BaseLoader(), autoescape=True)
    template = env.from_string(HTML_TEMPLATE)
    return template.render(**template_vars)


def save_html(html_content: str, filepath: str) -> None:
    """
    Save HTML content to a file.

    Args:
        html_content: HTML content to save
        filepath: Path where to save the HTML file
    """
    try:
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(html_content)
    except OSError as e:
        raise IOError(f"Failed to save HTML file to {filepath}: {e}")
