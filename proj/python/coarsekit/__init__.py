"""Large scale structures, entourages and asymptotic dimension on finite windows."""

from coarsekit._core import (
    ball_family,
    brick_coloring,
    bs12_divergence,
    compose,
    delta_of_family,
    find_decomposition,
    group_multiply,
    higson_defect,
    law_ids,
    maximal_family_of_entourage,
    metrize,
    multiplicity,
    path_metric,
    refines,
    run_cli,
    run_laws,
    star,
    star_family,
    trivial_extension,
)

__all__ = [
    "ball_family",
    "brick_coloring",
    "bs12_divergence",
    "compose",
    "delta_of_family",
    "find_decomposition",
    "group_multiply",
    "higson_defect",
    "law_ids",
    "maximal_family_of_entourage",
    "metrize",
    "multiplicity",
    "path_metric",
    "refines",
    "run_cli",
    "run_laws",
    "star",
    "star_family",
    "trivial_extension",
]
__version__ = "0.1.0"
