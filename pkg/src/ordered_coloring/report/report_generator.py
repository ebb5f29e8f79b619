"""Results reporting and export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict

import pandas as pd


class ReportGenerator:
    """Tabulate solver runs and gadget verification reports."""

    def __init__(self, output_dir: str = "./output"):
        """Initialize report generator."""
        self.output_dir = output_dir
        self.analysis_results: Dict = {}

    def compile_results(self, analyses: Dict) -> None:
        """Aggregate run results."""
        self.analysis_results = dict(analyses)

    def solver_table(self) -> pd.DataFrame:
        """One row per solver run."""
        rows = [run.record() for run in self.analysis_results.get("solve", [])]
        return pd.DataFrame(rows, columns=["route", "status", "n", "kernel_n", "elapsed"])

    def gadget_summary(self) -> pd.DataFrame:
        """One row per verified gadget."""
        rows = []
        for report in self.analysis_results.get("gadgets", []):
            rows.append(
                {
                    "name": report.name,
                    "n": report.n,
                    "in_arity": report.in_arity,
                    "out_arity": report.out_arity,
                    "pinnings": len(report.results),
                    "mismatches": len(report.mismatches),
                    "timed_out": len(report.timed_out),
                    "passed": report.passed,
                }
            )
        return pd.DataFrame(rows)

    @staticmethod
    def pinning_table(report) -> pd.DataFrame:
        """Per-pinning rows of one verification report."""
        return pd.DataFrame([r.to_dict() for r in report.results])

    def generate_summary_table(self) -> pd.DataFrame:
        """Counts of outcomes per route."""
        if not self.analysis_results:
            raise ValueError("No results compiled")
        table = self.solver_table()
        if table.empty:
            return pd.DataFrame(columns=["route", "sat", "unsat"])
        counts = table.groupby(["route", "status"]).size().unstack(fill_value=0)
        for status in ("sat", "unsat"):
            if status not in counts.columns:
                counts[status] = 0
        return counts[["sat", "unsat"]].reset_index()

    def export_to_csv(self, data: pd.DataFrame, filename: str) -> None:
        """Export table to CSV."""
        Path(self.output_dir).mkdir(parents=True, exist_ok=True)
        data.to_csv(Path(self.output_dir) / filename, index=False)

    def save_json_results(self, filename: str) -> None:
        """Save results as JSON."""
        Path(self.output_dir).mkdir(parents=True, exist_ok=True)
        doc = {
            "solve": [run.record() for run in self.analysis_results.get("solve", [])],
            "gadgets": [report.to_dict() for report in self.analysis_results.get("gadgets", [])],
        }
        with (Path(self.output_dir) / filename).open("w") as f:
            json.dump(doc, f, default=str, indent=2)
