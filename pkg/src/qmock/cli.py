"""Command-line front end: ``qmock expand|verify|enumerate|crosscheck|catalog``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import mock, partitions, qkit, registry
from .ring import InsufficientAccuracy, Monomial

SCHEMA = registry.SCHEMA

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SPEC, EXIT_ACCURACY = 0, 1, 2, 3, 4

GRAMMAR = """\
monomial grammar (arguments to --args):
  monomial := [sign] factor ('*' factor)*
  factor   := INT | VAR ['^' [sign] INT]
  VAR      := z | a | q
  examples: z   -z^2*q   3*a^-1*q^2   -1
"""


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    order: int | None = None
    format: str = "text"
    workers: int = 1
    list: bool = False
    output: str | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 0:
            raise UsageError("--order must be >= 0")
        if self.workers < 1:
            raise UsageError("--workers must be >= 1")


def default_order() -> int:
    raw = os.environ.get("QMOCK_DEFAULT_ORDER")
    if raw is None:
        return 30
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"QMOCK_DEFAULT_ORDER is not an integer: {raw!r}") from None
    if val < 0:
        raise UsageError("QMOCK_DEFAULT_ORDER must be >= 0")
    return val


def parse_args_list(text: str | None) -> dict[str, Monomial]:
    """``k=v,k=v`` with each value a monomial."""
    out: dict[str, Monomial] = {}
    if not text:
        return out
    for chunk in text.split(","):
        if "=" not in chunk:
            raise UsageError(f"argument {chunk!r} is not of the form name=monomial")
        k, v = (s.strip() for s in chunk.split("=", 1))
        if k in out:
            raise UsageError(f"argument {k!r} given twice")
        try:
            out[k] = Monomial.parse(v)
        except ValueError as e:
            raise UsageError(f"bad monomial for {k}: {e}") from None
    return out


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


# -- expand ---------------------------------------------------------------------


def _check_names(name: str, names, args: dict) -> None:
    unknown = sorted(set(args) - set(names))
    missing = [k for k in names if k not in args]
    if unknown or missing:
        raise UsageError(f"{name} takes arguments {list(names)}; missing {missing}, unexpected {unknown}")


def cmd_expand(ns, cfg: CliConfig) -> int:
    order = default_order() if cfg.order is None else cfg.order
    args = parse_args_list(ns.args)
    name = ns.name
    if name in mock.ARITY:
        names = mock.ARG_NAMES[name]
        _check_names(name, names, args)
        spec = mock.MockSpec(name, tuple(args[k] for k in names), ns.qsign, ns.step)
        s = mock.build(spec, order)
        if cfg.format == "json":
            body = {"schema": SCHEMA, "name": name, "args": {k: str(args[k]) for k in names},
                    "qsign": ns.qsign, "step": ns.step, "order": order, "series": s.to_json()}
            _emit(_dumps(body), cfg.output)
        else:
            _emit(s.to_text(), cfg.output)
        return EXIT_OK
    if name in qkit.CLASSICAL:
        if ns.qsign != 1:
            raise UsageError("--qsign applies to mock families only")
        _check_names(name, qkit.CLASSICAL[name].params, args)
        try:
            inst = qkit.classical(name, args, order, ns.step)
        except qkit.BadParams as e:
            raise mock.IllegalSpec(str(e)) from None
        if cfg.format == "json":
            body = {"schema": SCHEMA, "name": name, "args": inst.params, "order": order,
                    "conditions": inst.citation.note,
                    "lhs": inst.lhs.to_json(), "rhs": inst.rhs.to_json()}
            _emit(_dumps(body), cfg.output)
        else:
            _emit(f"# lhs\n{inst.lhs.to_text()}\n# rhs\n{inst.rhs.to_text()}", cfg.output)
        return EXIT_OK
    raise UsageError(f"unknown series name {name!r}; see `qmock catalog`")


# -- verify ---------------------------------------------------------------------


def _report_line(r: registry.VerifyReport, stable: bool) -> str:
    line = f"{r.id:<16} {r.status:<17} order={r.order:<3} {r.anchor}"
    if r.first_mismatch is not None:
        m = r.first_mismatch
        line += f" | first mismatch at q^{m.q_exp}: lhs={m.lhs} rhs={m.rhs}"
    if r.error:
        line += f" | {r.error}"
    if not stable:
        line += f" [{r.elapsed_ms:.1f} ms]"
    return line


def cmd_verify(ns, cfg: CliConfig) -> int:
    if bool(ns.id) == bool(ns.all):
        raise UsageError("give exactly one of --id ID or --all")
    ids = [ns.id] if ns.id else None
    if ns.id:
        registry.get_entry(ns.id)
    order = cfg.order
    if order is None and "QMOCK_DEFAULT_ORDER" in os.environ:
        order = default_order()
    if order is None:
        reports = [registry._safe_verify(e.id, e.default_acc, None)
                   for e in registry.ENTRIES if ids is None or e.id in ids]
    else:
        reports = registry.verify_all(order, cfg.workers, ids)
    if cfg.format == "json":
        text = registry.reports_json(reports, timings=not ns.stable)
    else:
        lines = [_report_line(r, ns.stable) for r in reports]
        good = sum(r.ok for r in reports)
        lines.append(f"{good}/{len(reports)} entries met expectation")
        text = "\n".join(lines)
    _emit(text, cfg.output)
    if any(r.status == "accuracy-error" for r in reports):
        return EXIT_ACCURACY
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


# -- enumerate / crosscheck ---------------------------------------------------------


def _family(name: str) -> str:
    if name not in partitions.FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(partitions.FAMILIES)}")
    return name


def cmd_enumerate(ns, cfg: CliConfig) -> int:
    fam = _family(ns.family)
    lo = partitions.MIN_N[fam]
    if ns.n < lo:
        raise UsageError(f"{fam} is defined for n >= {lo}")
    if fam == "p_substar":
        if cfg.list:
            raise UsageError("p_substar is a weighted count; --list is unavailable")
        count, items = partitions.p_substar(ns.n), None
    else:
        res = partitions.FAMILIES[fam](ns.n, items=cfg.list)
        count, items = res.count, res.items
    if cfg.format == "json":
        body = {"schema": SCHEMA, "family": fam, "n": ns.n, "count": count}
        if items is not None:
            body["items"] = [partitions.to_json_item(it) for it in items]
        _emit(_dumps(body), cfg.output)
    else:
        lines = [str(count)]
        if items is not None:
            lines += [partitions.render(it) for it in items]
        _emit("\n".join(lines), cfg.output)
    return EXIT_OK


def cmd_crosscheck(ns, cfg: CliConfig) -> int:
    fam = _family(ns.family)
    if ns.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    rep = partitions.crosscheck(fam, ns.max_n)
    if cfg.format == "json":
        body = {"schema": SCHEMA, "family": fam, "max_n": ns.max_n, "status": rep.status,
                "first_mismatch": rep.first_mismatch.to_dict() if rep.first_mismatch else None}
        _emit(_dumps(body), cfg.output)
    else:
        line = f"{fam} through n={ns.max_n}: {rep.status}"
        if rep.first_mismatch is not None:
            m = rep.first_mismatch
            line += f" (n={m.q_exp}: enumerator {m.lhs}, generating function {m.rhs})"
        _emit(line, cfg.output)
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_catalog(ns, cfg: CliConfig) -> int:
    from .catalog import build_catalog
    cat = build_catalog()
    if cfg.format == "json":
        _emit(_dumps(cat), cfg.output)
    else:
        lines = ["mock families:"]
        lines += [f"  {f['name']}({', '.join(f['args'])})  {f['definition']}" for f in cat["mock_families"]]
        lines.append("classical identities:")
        lines += [f"  {c['name']}({', '.join(c['params'])})  if {c['conditions']}" for c in cat["classical"]]
        lines.append("verification entries:")
        lines += [f"  {e['id']:<16} {e['anchor']}" for e in cat["identities"]]
        _emit("\n".join(lines), cfg.output)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")

    ordered = argparse.ArgumentParser(add_help=False)
    ordered.add_argument("--order", type=int, default=None,
                         help="truncation order (default: $QMOCK_DEFAULT_ORDER or 30)")

    p = argparse.ArgumentParser(prog="qmock", description="q-series expansion and identity verification.",
                                epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common, ordered], epilog=GRAMMAR,
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       help="expand a mock family or both sides of a classical identity")
    e.add_argument("name")
    e.add_argument("--args", metavar="k=m,...", help="named monomial arguments, e.g. a=a,z=z")
    e.add_argument("--qsign", type=int, choices=(1, -1), default=1, help="substitute q -> qsign*q")
    e.add_argument("--step", type=int, default=1, help="base q^step (bigG, rho3, classical)")
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", parents=[common, ordered], help="verify catalog identities")
    v.add_argument("--id")
    v.add_argument("--all", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--stable", action="store_true", help="omit timings so output is byte-stable")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("enumerate", parents=[common], help="count (and list) partitions")
    n.add_argument("family")
    n.add_argument("n", type=int)
    n.add_argument("--list", action="store_true")
    n.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("crosscheck", parents=[common], help="enumerator vs generating function")
    c.add_argument("family")
    c.add_argument("--max-n", type=int, required=True)
    c.set_defaults(func=cmd_crosscheck)

    k = sub.add_parser("catalog", parents=[common], help="list names, parameters and identities")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        cfg = CliConfig(ns.command, getattr(ns, "order", None), ns.format,
                        getattr(ns, "workers", 1), getattr(ns, "list", False), ns.output)
        return ns.func(ns, cfg)
    except (registry.UnknownId, qkit.UnknownName) as ex:
        print(f"qmock: error: unknown id {ex.args[0]!r}; see `qmock catalog`", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as ex:
        print(f"qmock: error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    except mock.IllegalSpec as ex:
        print(f"qmock: illegal specification: {ex}", file=sys.stderr)
        return EXIT_SPEC
    except (InsufficientAccuracy, registry.AccuracyTooLow) as ex:
        print(f"qmock: accuracy error: {ex}", file=sys.stderr)
        return EXIT_ACCURACY


if __name__ == "__main__":
    sys.exit(main())
