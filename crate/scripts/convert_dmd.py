#!/usr/bin/env python3
"""Convert the Andrews & Herzberg Table 38.1 DMD data to ajel's CSV dialect.

The raw table circulates in a few whitespace-separated layouts, so the column
positions are configurable. The output is fixed: header ``group,ck,h``,
noncarrier rows first, then carrier rows. The script refuses to write a file
that does not contain exactly 134 noncarrier and 75 carrier samples with
finite CK and H values, since downstream checks depend on that shape.
"""

import argparse
import math
import sys


def parse_args():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("input", help="raw whitespace-separated table file")
    p.add_argument("--output", default="data/dmd.csv", help="destination CSV")
    p.add_argument("--group-col", type=int, default=0,
                   help="0-based column holding the carrier/noncarrier code")
    p.add_argument("--ck-col", type=int, default=1,
                   help="0-based column holding creatine kinase")
    p.add_argument("--h-col", type=int, default=2,
                   help="0-based column holding hemopexin")
    p.add_argument("--carrier-value", default="2",
                   help="group-column token that marks a carrier row "
                        "(everything else is a noncarrier)")
    p.add_argument("--skip-missing", action="store_true",
                   help="drop rows whose CK or H field is a missing-value "
                        "marker instead of aborting")
    return p.parse_args()


MISSING = {"", ".", "NA", "na", "-", "*", "?"}


def to_float(token, line_no, what):
    if token in MISSING:
        return None
    try:
        value = float(token)
    except ValueError:
        sys.exit(f"line {line_no}: cannot parse {what} value {token!r}")
    if not math.isfinite(value):
        sys.exit(f"line {line_no}: non-finite {what} value {token!r}")
    return value


def main():
    args = parse_args()
    noncarrier, carrier = [], []
    with open(args.input, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            fields = line.split()
            if not fields:
                continue
            needed = max(args.group_col, args.ck_col, args.h_col)
            if len(fields) <= needed:
                sys.exit(f"line {line_no}: expected at least {needed + 1} "
                         f"columns, found {len(fields)}")
            ck = to_float(fields[args.ck_col], line_no, "CK")
            h = to_float(fields[args.h_col], line_no, "H")
            if ck is None or h is None:
                if args.skip_missing:
                    continue
                sys.exit(f"line {line_no}: missing CK or H value "
                         f"(use --skip-missing to drop such rows)")
            group = fields[args.group_col]
            (carrier if group == args.carrier_value else noncarrier).append((ck, h))

    if len(noncarrier) != 134 or len(carrier) != 75:
        sys.exit(f"expected 134 noncarrier and 75 carrier rows, found "
                 f"{len(noncarrier)} and {len(carrier)}; check the column "
                 f"flags and --carrier-value against your copy of the table")

    def fmt(v):
        return f"{v:g}"

    with open(args.output, "w", encoding="utf-8") as out:
        out.write("group,ck,h\n")
        for ck, h in noncarrier:
            out.write(f"noncarrier,{fmt(ck)},{fmt(h)}\n")
        for ck, h in carrier:
            out.write(f"carrier,{fmt(ck)},{fmt(h)}\n")
    print(f"wrote {args.output}: 134 noncarrier + 75 carrier rows")


if __name__ == "__main__":
    main()
