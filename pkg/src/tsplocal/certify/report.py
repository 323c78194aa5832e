"""Structured text rendering of analyzer certificates, for golden files."""

from __future__ import annotations

from .analyzer import BLUE, RED, G2Certificate, LengthClassReport


def render_length_classes(
    report: LengthClassReport, reference_optimal: bool | None = None
) -> str:
    lines = [
        "LENGTH CLASS REPORT",
        f"k = {report.k}",
        f"reference length L = {report.reference_length}",
    ]
    if reference_optimal is True:
        lines.append("reference = optimal tour (counts usable for ratio bounds)")
    elif reference_optimal is False:
        lines.append("reference = arbitrary tour (girth claims only)")
    lines.append("class  count  tour-positions")
    for l in report.nonempty_classes():
        positions = " ".join(str(p) for p in report.class_edges[l])
        lines.append(f"{l:>5}  {report.counts[l]:>5}  {positions}")
    return "\n".join(lines) + "\n"


def render_g2_certificate(cert: G2Certificate) -> str:
    lines = [
        "CONTRACTION CERTIFICATE",
        f"k = {cert.k}",
        f"class l = {cert.l}",
        f"q_l = {cert.q_l}",
        f"arcs M = {cert.contraction.arc_count}",
        f"retained red->blue class edges = {cert.retained}",
        "coloring = "
        + "".join("R" if c == RED else "B" for c in cert.coloring),
        f"girth = {cert.girth_value}",
    ]
    if cert.violating_cycle is None:
        lines.append(f"finding = girth >= {2 * cert.k}: no witness cycle")
    else:
        lines.append("finding = violating cycle (tail arc, head arc, tour position):")
        for t, h, lab in cert.violating_cycle:
            lines.append(f"  {t} -> {h}  @ {lab}")
    return "\n".join(lines) + "\n"
