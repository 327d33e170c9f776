"""Figure rendering for the eitnoise CSV output format."""

from .render import (
    EXPECTED_SCHEMA,
    FIGURE_NAMES,
    RenderError,
    load_table,
    render,
    save,
)

__version__ = "0.1.0"
__all__ = ["EXPECTED_SCHEMA", "FIGURE_NAMES", "RenderError", "load_table",
           "render", "save", "__version__"]
