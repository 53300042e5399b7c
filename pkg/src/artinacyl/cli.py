"""Command-line front end.

Subcommands: analyze, classify, gamma, certify, shadow, export.  Input
is a JSON document {"vertices": [...], "edges": [[u, v, label], ...]};
a missing pair means no relation.  Output documents are deterministic
(sorted keys, no timestamps) with a metadata block carrying the tool
version and the input hash.

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 hypothesis not met, 4 resource cap exceeded, 5 certificate check
failed.  Every nonzero exit prints one line "ERR:<code>:<message>" to
stderr.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .cert import certify, FAIL
from .classify import center_report, classify, decide_acyl
from .errors import (ArtinAcylError, CertificateError, GraphFormatError,
                     HypothesisError, ResourceLimitError)
from .gamma import build_gamma, plan_from_json
from .graphs import (join_decompose, parse_defining_graph, shape_flags,
                     to_dot)
from .shadow import build_shadow, delta_sets, links_full_check, \
    separation_check


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="artinacyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command")
    for name in ("analyze", "classify", "gamma", "certify", "shadow",
                 "export"):
        sp = sub.add_parser(name)
        sp.add_argument("input_pos", nargs="?", metavar="INPUT")
        sp.add_argument("--input")
        sp.add_argument("--output")
        sp.add_argument("--cap", type=int)
        if name == "shadow":
            sp.add_argument("--radius", type=int)
            sp.add_argument("--reduced", action="store_true")
        if name in ("shadow", "export"):
            sp.add_argument("--format", choices=("json", "dot"),
                            default="json" if name == "shadow" else "dot")
        if name == "certify":
            sp.add_argument("--plan",
                            help="re-check a previously emitted plan "
                                 "instead of rebuilding it")
    return p


def _cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        if args.cap < 1:
            raise _UsageError("--cap must be positive")
        return args.cap
    env = os.environ.get("ARTINACYL_CAP")
    return int(env) if env else None


def _read_input(args) -> tuple:
    path = args.input or args.input_pos
    if not path:
        raise _UsageError("an input file is required")
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read input: {exc}") from exc
    g = parse_defining_graph(raw.decode("utf-8", errors="replace"))
    return g, hashlib.sha256(raw).hexdigest()


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _document(payload: dict, digest: str) -> str:
    doc = {"meta": {"tool": "artinacyl", "version": __version__,
                    "input_sha256": digest},
           **payload}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _run(args) -> int:
    cmd = args.command
    if cmd is None:
        raise _UsageError("a command is required")
    cap = _cap(args)
    g, digest = _read_input(args)

    if cmd == "classify":
        _emit(args, _document({"classification": classify(g).to_json()},
                              digest))
        return 0

    if cmd == "analyze":
        d = join_decompose(g)
        is_clique, _ = shape_flags(g)
        rep = classify(g)
        payload = {
            "classification": rep.to_json(),
            "verdict": decide_acyl(g).to_json(),
            "join_decomposition": {
                "clique_factor": list(d.clique_factor),
                "factors": [list(f) for f in d.factors],
            },
            "center": (center_report(g).to_json()
                       if rep.irreducible and not is_clique else None),
        }
        _emit(args, _document(payload, digest))
        return 0

    if cmd == "gamma":
        plan = build_gamma(g)
        _emit(args, _document({"plan": plan.to_json()}, digest))
        return 0

    if cmd == "certify":
        if args.plan:
            with open(args.plan) as fh:
                data = json.load(fh)
            plan = plan_from_json(g, data.get("plan", data))
        else:
            plan = build_gamma(g)
        cert = certify(g, plan, cap)
        _emit(args, _document({"certificate": cert.to_json()}, digest))
        if cert.overall_status == FAIL:
            raise CertificateError("at least one certificate check failed")
        return 0

    if cmd == "shadow":
        v0 = join_decompose(g).clique_factor
        delta = delta_sets(g, v0)
        complex_ = build_shadow(g, delta, reduced=args.reduced, cap=cap,
                                radius=args.radius)
        if args.format == "dot":
            _emit(args, complex_.to_dot())
            return 0
        checks = {}
        if not args.reduced:
            sub = build_shadow(g, delta, reduced=True, cap=cap,
                               radius=args.radius)
            checks["links"] = links_full_check(complex_, sub, g)
        checks["separation"] = [
            separation_check(complex_, ci)
            for ci in range(len(complex_.hyperplane_classes))]
        _emit(args, _document({"complex": complex_.to_json(),
                               "checks": checks}, digest))
        return 0

    if cmd == "export":
        _emit(args, to_dot(g))
        return 0

    raise _UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"ERR:1:{exc}", file=sys.stderr)
        return 1
    except GraphFormatError as exc:
        print(f"ERR:2:{exc}", file=sys.stderr)
        return 2
    except HypothesisError as exc:
        print(f"ERR:3:{exc}", file=sys.stderr)
        return 3
    except CertificateError as exc:
        print(f"ERR:5:{exc}", file=sys.stderr)
        return 5
    except ResourceLimitError as exc:
        print(f"ERR:4:{exc}", file=sys.stderr)
        return 4
    except ArtinAcylError as exc:
        print(f"ERR:{exc.exit_code}:{exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
