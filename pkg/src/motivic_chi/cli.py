"""Command-line front end.

    chi --field sqrt-minus-one --expr "GModN(A,2)"
    chi --field finite:3 --file space.chi --trace --format json
    chi selftest

Exit status: 0 on success, 1 on bad input (syntax, validation, field
selector, unsupported type), 2 when a derivation fails its own replay.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .dsl import DslError, parse
from .engine import DerivationMismatch, ValidationError, eval_chi, verify_derivation
from .gw import FieldModel
from .roots import UnsupportedCartanType


@dataclass(frozen=True)
class CliConfig:
    field: str = "generic"
    format: str = "text"
    trace: bool = False
    expr: str | None = None
    file: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _use_color(stream) -> bool:
    if os.environ.get("CHI_COLOR", "").lower() in ("0", "no", "never", "false", "off"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text, code, color):
    return f"\033[{code}m{text}\033[0m" if color else text


def run_eval(cfg: CliConfig, color: bool = False) -> tuple[int, str]:
    if (cfg.expr is None) == (cfg.file is None):
        return 1, "error: give exactly one of --expr or --file"
    try:
        model = FieldModel.parse(cfg.field)
    except ValueError as exc:
        return 1, f"error: {exc}"
    try:
        if cfg.file is not None:
            with open(cfg.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = cfg.expr
        e = parse(text)
        value, deriv = eval_chi(e, model)
    except OSError as exc:
        return 1, f"error: {exc}"
    except DslError as exc:
        return 1, f"syntax error at {exc}"
    except ValidationError as exc:
        return 1, "\n".join(f"invalid: {d}" for d in exc.diagnostics)
    except UnsupportedCartanType as exc:
        return 1, f"unsupported: {exc}"
    try:
        verify_derivation(deriv, model)
    except DerivationMismatch as exc:
        return 2, f"internal error: derivation replay failed: {exc}"

    if cfg.format == "json":
        out = {"expr": deriv.expr, "model": model.selector, "value": value.to_json()}
        if cfg.trace:
            out["derivation"] = deriv.to_json()
        return 0, json.dumps(out, indent=2)
    lines = [_paint(str(value), "1;32", color)]
    if cfg.trace:
        lines.append(deriv.render())
    return 0, "\n".join(lines)


def run_selftest(cfg: CliConfig | None = None, color: bool = False) -> tuple[int, str]:
    from .selftest import run_all

    checks = run_all()
    lines = []
    for c in checks:
        line = c.line()
        lines.append(_paint(line, "32" if c.passed else "31", color))
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return (0 if not failed else 1), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chi", description="Motivic Euler characteristics in GW(k).")
    p.add_argument("--field", default="generic",
                   help="generic | sqrt-minus-one | real-closed | finite:p (default: generic)")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--expr", help="inline expression")
    src.add_argument("--file", help="path to a .chi file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trace", action="store_true", help="print the derivation tree")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    color = _use_color(sys.stdout)
    if argv and argv[0] == "selftest":
        status, report = run_selftest(color=color)
        print(report)
        return status
    args = build_parser().parse_args(argv)
    cfg = CliConfig(args.field, args.format, args.trace, args.expr, args.file)
    status, out = run_eval(cfg, color=color)
    print(out, file=sys.stdout if status == 0 else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
