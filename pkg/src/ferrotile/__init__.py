"""Domino tilings of Ferrers boards: decide, construct, count and enumerate."""

from .counting import count_brute, count_fkt, enumerate_tilings, kasteleyn_matrix
from .matching import build_graph, hall_check, matching_to_tiling, max_matching
from .partitions import (
    Cell,
    Color,
    ColorSummary,
    Partition,
    cells,
    color_of,
    color_summary,
    conjugate,
    generate_partitions,
    is_staircase,
    parse_partition,
    row_labels,
)
from .render import render_ascii
from .tiler import (
    Domino,
    StepOutcome,
    Tiling,
    Untileable,
    find_zero_row,
    step_decompose,
    tile,
    validate_tiling,
)

__version__ = "0.1.0"
