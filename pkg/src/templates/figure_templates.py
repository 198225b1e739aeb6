"""
Reproduction templates for the comparison figures and the reference table.

Each figure template names the solution curves its data file carries; the
reference table holds the published functional values used to pick a grid
size from the sweep.
"""

import copy
from typing import Any, Dict, List, Optional, Sequence, Tuple


# Convergence of both fractional solutions to the classical one
FIGURE_CONVERGENCE_TEMPLATE = {
    "name": "figure-1",
    "description": "Convergence of y_RL and y_C to the classical solution as alpha approaches 1",
    "filename": "figure_1.csv",
    "series": [
        {"method": "crl", "alphas": [0.7, 0.8, 0.9, 1.0]},
        {"method": "cc", "alphas": [0.7, 0.8, 0.9, 1.0]},
    ],
}

# C-RL against C-C as alpha approaches 0.5
FIGURE_COMPARISON_TEMPLATE = {
    "name": "figure-2",
    "description": "Comparison of the C-RL and C-C solutions",
    "filename": "figure_2.csv",
    "series": [
        {"method": "crl", "alphas": [0.55, 0.6, 0.7, 0.8, 0.9]},
        {"method": "cc", "alphas": [0.55, 0.6, 0.7, 0.8, 0.9]},
    ],
}

# Only the C-C equation yields a solution below alpha = 0.5
FIGURE_CC_SMALL_ORDER_TEMPLATE = {
    "name": "figure-3",
    "description": "Solution C-C for alpha = 0.4",
    "filename": "figure_3.csv",
    "series": [
        {"method": "cc", "alphas": [0.4]},
    ],
}


TEMPLATE_REGISTRY: Dict[str, Dict[str, Any]] = {
    "figure-1": FIGURE_CONVERGENCE_TEMPLATE,
    "convergence": FIGURE_CONVERGENCE_TEMPLATE,
    "figure-2": FIGURE_COMPARISON_TEMPLATE,
    "comparison": FIGURE_COMPARISON_TEMPLATE,
    "figure-3": FIGURE_CC_SMALL_ORDER_TEMPLATE,
    "cc-small-order": FIGURE_CC_SMALL_ORDER_TEMPLATE,
}


# Published functional values: alpha -> (C-RL, C-C); None where no solution exists
REFERENCE_TABLE: Dict[float, Tuple[Optional[float], Optional[float]]] = {
    1.0: (-12.1752, -12.1752),
    0.95: (-16.4431, -14.3133),
    0.9: (-17.3685, -16.7006),
    0.8: (-36.6555, -22.2567),
    0.7: (-60.2608, -28.9016),
    0.55: (-127.9983, -40.9804),
    0.4: (None, -55.5863),
}


def get_figure_template(name: str) -> Optional[Dict[str, Any]]:
    """
    Look up a figure template by name or alias.

    Args:
        name: Template name ("figure-1") or alias ("convergence")

    Returns:
        The template dictionary, or None if unknown

    Example:
        >>> get_figure_template("convergence")["filename"]
        'figure_1.csv'
    """
    return TEMPLATE_REGISTRY.get(name.lower().strip())


def list_available_templates() -> List[str]:
    """
    List all figure template names (aliases excluded).

    Example:
        >>> list_available_templates()
        ['figure-1', 'figure-2', 'figure-3']
    """
    seen = set()
    result = []
    for template in TEMPLATE_REGISTRY.values():
        if template["name"] not in seen:
            seen.add(template["name"])
            result.append(template["name"])
    return sorted(result)


def customize_template(
    template: Dict[str, Any],
    alphas: Optional[Sequence[float]] = None
) -> Dict[str, Any]:
    """
    Copy a template, replacing every series' alpha list when alphas is given.

    Example:
        >>> custom = customize_template(FIGURE_CONVERGENCE_TEMPLATE, [0.75])
        >>> custom["series"][0]["alphas"]
        [0.75]
    """
    customized = copy.deepcopy(template)
    if alphas:
        for series in customized["series"]:
            series["alphas"] = [float(a) for a in alphas]
    return customized


def reference_values(alpha: float) -> Tuple[Optional[float], Optional[float]]:
    """Published (C-RL, C-C) values at alpha, or (None, None) off the table."""
    for key, values in REFERENCE_TABLE.items():
        if abs(key - alpha) < 1e-12:
            return values
    return (None, None)
