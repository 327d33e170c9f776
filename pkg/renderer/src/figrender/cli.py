"""Command line front end: eit-render <figure> --in table.csv --out fig.svg"""

import argparse
import sys

from .render import FIGURE_NAMES, RenderError, render, save


def build_parser():
    ap = argparse.ArgumentParser(
        prog="eit-render",
        description="Render a figure-preset CSV (with its JSON sidecar) "
                    "to SVG or PNG.")
    ap.add_argument("figure", choices=FIGURE_NAMES)
    ap.add_argument("--in", dest="table", required=True, metavar="CSV",
                    help="input table; its sidecar must sit at CSV.json")
    ap.add_argument("--out", required=True, help="output image path")
    ap.add_argument("--format", choices=("svg", "png"), default=None,
                    help="default: inferred from the output suffix")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        save(render(args.figure, args.table), args.out, args.format)
    except (RenderError, OSError) as exc:
        print(f"eit-render: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
