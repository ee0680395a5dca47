"""Plain-text and markdown formatting of command results."""

from typing import Any, Sequence, Tuple


def _value(value: Any) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, tuple):
        return "(" + ", ".join(_value(item) for item in value) + ")"
    return str(value)


class ReportTemplates:
    """Formats results of the command-line subcommands."""

    @staticmethod
    def spectrum(label: str, order: int, poly, spectrum) -> str:
        """
        Format the exact polynomial and floating spectrum of one graph.

        Args:
            label: Where the graph came from
            order: Number of vertices
            poly: Exact distance Laplacian characteristic polynomial
            spectrum: Floating spectrum

        Returns:
            Formatted spectrum block
        """
        lines = [f"{label} (order {order})", f"  polynomial: {poly}", "  spectrum:"]
        for value, multiplicity in spectrum.grouped():
            lines.append(f"    {value:.10g}" + (f"  x{multiplicity}" if multiplicity > 1 else ""))
        return "\n".join(lines)

    @staticmethod
    def verify(verdict: str, d_cospectral: bool, differences: Sequence[Tuple[str, Any, Any]]) -> str:
        """
        Format a cospectrality verdict with the parameters that differ.

        Args:
            verdict: ``"isomorphic"``, ``"cospectral, non-isomorphic"`` or ``"not cospectral"``
            d_cospectral: Whether the distance matrices are cospectral too
            differences: ``(parameter, first value, second value)`` triples

        Returns:
            Formatted verdict
        """
        lines = [verdict, f"distance matrix cospectral: {_value(d_cospectral)}"]
        if differences:
            width = max(len(name) for name, _, _ in differences)
            lines.append("differing parameters:")
            lines.extend(
                f"  {name.ljust(width)}  {_value(a)}  vs  {_value(b)}" for name, a, b in differences
            )
        else:
            lines.append("no parameter differs")
        return "\n".join(lines)

    @staticmethod
    def census_summary(classes: Sequence, graph_count: int) -> str:
        if not classes:
            return f"No cospectral classes among {graph_count} graphs."
        lines = [f"{len(classes)} cospectral classes among {graph_count} graphs:"]
        for index, c in enumerate(classes):
            lines.append(f"  [{index}] order {c.order}: {c.poly}")
            lines.extend(f"      {member}" for member in c.members)
        return "\n".join(lines)

    @staticmethod
    def preservation_table(report) -> str:
        """
        Render a preservation report as a markdown table.

        Args:
            report: ``PreservationReport``

        Returns:
            Markdown with one row per parameter and a section of one-sided
            witnesses for the open-question properties
        """
        lines = [
            f"Compared {report.pair_count} pairs in {report.class_count} classes.",
            "",
            "| parameter | status | differing pairs | example |",
            "|---|---|---|---|",
        ]
        for name, entry in report.parameters.items():
            example = ""
            if entry.witnesses:
                w = entry.witnesses[0]
                example = f"`{w.first}` {_value(w.first_value)} / `{w.second}` {_value(w.second_value)}"
            lines.append(f"| {name} | {entry.status} | {entry.differing_pairs} | {example} |")
        found = {name: ws for name, ws in report.open_questions.items() if ws}
        if found:
            lines += ["", "One-sided witnesses (open questions, nothing asserted):", ""]
            for name, witnesses in found.items():
                for w in witnesses:
                    lines.append(
                        f"- {name}: class {w.class_index}, `{w.first}` {_value(w.first_value)}"
                        f" / `{w.second}` {_value(w.second_value)}"
                    )
        return "\n".join(lines)

    @staticmethod
    def check_result(result) -> str:
        status = "PASS" if result.passed else "FAIL"
        lines = [
            f"{status} {result.check_id}: {result.description}",
            f"  cases: {result.cases}, failures: {result.failure_count}",
        ]
        lines.extend(f"  failed: {failure}" for failure in result.failures)
        return "\n".join(lines)
