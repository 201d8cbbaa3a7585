from .config import EXPERIMENTS, SweepSpec, parse_config, parse_text
from .output import SummaryRow, summarize, write_csv, write_summary_csv
from .sweep import SweepError, SweepRun, run_sweep

__all__ = [
    "EXPERIMENTS", "SweepSpec", "parse_config", "parse_text",
    "SummaryRow", "summarize", "write_csv", "write_summary_csv",
    "SweepError", "SweepRun", "run_sweep",
]
