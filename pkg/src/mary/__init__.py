"""Exact counting of M-ary partitions and verification of their congruences."""
from .mseq import MSequence, parse_sequence, format_sequence
from .partitions import count_pm, pm_series, pm_values
from .series import TruncatedSeries

__all__ = ["MSequence", "parse_sequence", "format_sequence", "count_pm", "pm_series", "pm_values", "TruncatedSeries"]
