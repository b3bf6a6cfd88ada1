"""Min-power symmetric connectivity solvers."""

from ._core import (
    GuardExceeded,
    Instance,
    MinPSCError,
    ParseError,
    __version__,
    generate_geometric,
    generate_grid,
    generate_tree_plus,
    kernelize,
    parse_instance,
    read_instance,
    render_instance,
    repetition_count,
    setcover_instance,
    solve,
    verify,
)

__all__ = [
    "GuardExceeded",
    "Instance",
    "MinPSCError",
    "ParseError",
    "__version__",
    "generate_geometric",
    "generate_grid",
    "generate_tree_plus",
    "kernelize",
    "parse_instance",
    "read_instance",
    "render_instance",
    "repetition_count",
    "setcover_instance",
    "solve",
    "verify",
]
