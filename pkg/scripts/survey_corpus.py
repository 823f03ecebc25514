#!/usr/bin/env python3
"""Survey the corpus fans: structural properties, quotient presentation data,
and the embedding pipeline on a few codimension-one actions.

Usage: python scripts/survey_corpus.py
"""

from coxtoric.corpus import corpus_fans
from coxtoric.cox import class_group, complement_codim, cox_presentation, variety_is_smooth
from coxtoric.errors import UnsupportedShapeError
from coxtoric.groups import WeightAction, decompose_subgroup
from coxtoric.intlin import IntMatrix
from coxtoric.pipeline import theorem_pipeline


def survey():
    header = f"{'fan':<14}{'m':>3} {'nondeg':>7} {'complete':>9} {'convex':>7} " \
             f"{'smooth':>7} {'class group':>14} {'H':>12} {'codim':>6}"
    print(header)
    print("-" * len(header))
    for name, fan in corpus_fans().items():
        p = cox_presentation(fan)
        try:
            convex = str(fan.has_convex_support())
        except UnsupportedShapeError:
            convex = "n/c"
        free, torsion = class_group(p)
        torus_rank, orders = decompose_subgroup(p.kernel_group)
        cg = f"Z^{free}" + (" x " + " x ".join(f"Z/{d}" for d in torsion) if torsion else "")
        h = f"T^{torus_rank}" + (" x " + " x ".join(f"Z/{d}" for d in orders) if orders else "")
        codim = complement_codim(p)
        codim_str = "empty" if codim == p.num_coordinates + 1 else str(codim)
        print(f"{name:<14}{p.num_coordinates:>3} {str(fan.is_nondegenerate()):>7} "
              f"{str(fan.is_complete()):>9} {convex:>7} {str(variety_is_smooth(fan)):>7} "
              f"{cg:>14} {h:>12} {codim_str:>6}")


def pipeline_examples():
    fans = corpus_fans()
    cases = [
        ("bl0_a2", [[1, 0, 0]]),
        ("a2", [[1, 0]]),
        ("quadric_cone", [[0, 1]]),
        ("p2", [[1, 1, 1]]),
        ("p2", [[1, 0, 0]]),
    ]
    print("\npipeline runs (weight matrix on the quotient coordinates):")
    for name, weights in cases:
        action = WeightAction(len(weights), IntMatrix.from_rows(weights))
        report = theorem_pipeline(fans[name], action)
        if report.hypotheses_met:
            emb = [list(r) for r in report.embedding.entries]
            print(f"  {name:<14} W={weights}  ->  embedding {emb}")
        else:
            print(f"  {name:<14} W={weights}  ->  {report.diagnostic}")


if __name__ == "__main__":
    survey()
    pipeline_examples()
