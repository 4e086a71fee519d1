"""Command-line front end.

Exit status: 0 on success, 1 when a certificate is rejected or a search is
incomplete, 2 on usage errors.  Rationals are accepted only as ``p`` or ``p/q``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, Tuple

from .covering import (Certificate, MalformedCertificate, cover_set, load_certificate,
                       serialize_certificate, shipped_certificate, verify)
from .division import CertificateIncomplete, divide, gcd_steps
from .exact import format_exact, format_rational, parse_rational
from .field import SUPPORTED, FieldElement, RingElement, UnsupportedField, builtin_field, custom_field
from .plot import render_svg, render_tikz
from .regions import SearchConfig, search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _pair_of(text: str, conv) -> Tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated values, got {text!r}")
    try:
        return conv(parts[0]), conv(parts[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _int(text: str) -> int:
    text = text.strip()
    if not text.lstrip("+-").isdigit():
        raise ValueError(f"not an integer: {text!r}")
    return int(text)


def _field(m: int):
    try:
        return builtin_field(m)
    except UnsupportedField as exc:
        raise UsageError(str(exc)) from None


def _ring_text(g: RingElement) -> str:
    return f"{g.x} + {g.y}*sqrt(m)" if g.y >= 0 else f"{g.x} - {-g.y}*sqrt(m)"


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args) -> Certificate:
    if args.certificate is not None:
        try:
            return load_certificate(args.certificate)
        except OSError as exc:
            raise UsageError(f"cannot read certificate: {exc}") from None
    if args.m is None:
        raise UsageError("give a certificate path or -m for a shipped certificate")
    if args.m not in SUPPORTED:
        raise UsageError(f"no shipped certificate for m={args.m}")
    return shipped_certificate(args.m)


# -- commands ------------------------------------------------------------------

def cmd_divide(args) -> int:
    F = _field(args.m)
    a, b = _pair_of(args.xi, parse_rational)
    try:
        res = divide(F, FieldElement(a, b), all_pairs=args.all_pairs)
    except CertificateIncomplete as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    g = res.quotient
    if args.format == "json":
        _emit(args, json.dumps({
            "m": F.m, "xi": [format_rational(a), format_rational(b)],
            "quotient": [g.x, g.y], "pair": list(res.pair_used), "signs": list(res.signs_used),
            "norm": format_rational(res.remainder_norm), "M1": format_rational(F.M1)}) + "\n")
    else:
        _emit(args, f"gamma = {_ring_text(g)}  (m={F.m})\n"
                    f"pair  = ({res.pair_used[0]}, {res.pair_used[1]})\n"
                    f"Norm(xi - gamma) = {format_rational(res.remainder_norm)}  (M1 = {format_rational(F.M1)})\n")
    return EXIT_OK


def cmd_gcd(args) -> int:
    F = _field(args.m)
    alpha = RingElement(*_pair_of(args.alpha, _int))
    beta = RingElement(*_pair_of(args.beta, _int))
    if alpha.is_zero() and beta.is_zero():
        raise UsageError("gcd(0, 0) is undefined")
    g, rems = gcd_steps(F, alpha, beta)
    if args.format == "json":
        _emit(args, json.dumps({"m": F.m, "alpha": [alpha.x, alpha.y], "beta": [beta.x, beta.y],
                                "gcd": [g.x, g.y], "norm": g.norm(F.m), "steps": len(rems)}) + "\n")
    else:
        _emit(args, f"gcd = {_ring_text(g)}  (m={F.m}, norm {g.norm(F.m)}, {len(rems)} division step(s))\n")
    return EXIT_OK


def cmd_coverset(args) -> int:
    F = _field(args.m)
    p = _pair_of(args.p, parse_rational)
    if args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    pairs = cover_set(F, p, args.bound)
    if args.format == "json":
        _emit(args, json.dumps({"m": F.m, "point": [format_rational(z) for z in p], "bound": args.bound,
                                "pairs": [list(q) for q in pairs]}) + "\n")
    else:
        _emit(args, " ".join(f"[{u},{v}]" for u, v in pairs) + "\n")
    return EXIT_OK


def cmd_search(args) -> int:
    if args.M is not None:
        try:
            F = custom_field(args.m, parse_rational(args.M))
        except (UnsupportedField, ValueError) as exc:
            raise UsageError(str(exc)) from None
    else:
        F = _field(args.m)
    if args.budget < 0:
        raise UsageError("--budget must be nonnegative")
    bound = args.bound if args.bound is not None else (1000 if F.m == 19 else 100)
    res = search(F, config=SearchConfig(bound=bound, max_depth=args.budget))
    cert = res.certificate
    report = verify(cert) if cert.regions else None
    # with a custom --M the field check (M against the known minimum) does not apply
    complete = res.complete and report is not None and all(
        c.passed for c in report.checks if c.name != "field" or args.M is None)
    for line in res.log:
        print(line, file=sys.stderr)
    for line in res.failures:
        print("unprovable: " + line, file=sys.stderr)
    if args.format == "json":
        _emit(args, json.dumps({
            "m": F.m, "M": format_rational(F.M1), "complete": complete, "pairs": [list(q) for q in cert.pairs],
            "residue": [[format_exact(p.lo), format_exact(p.hi)] for p in res.residue],
            "certificate": serialize_certificate(cert)}) + "\n")
    else:
        head = "" if complete else "# INCOMPLETE: uncovered pieces remain or claims could not be proved\n"
        _emit(args, head + serialize_certificate(cert))
    print("search complete, certificate verified" if complete else "search incomplete", file=sys.stderr)
    return EXIT_OK if complete else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        cert = _load(args)
    except MalformedCertificate as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = verify(cert)
    if args.format == "json":
        _emit(args, json.dumps(report.to_dict()) + "\n")
    else:
        _emit(args, report.render() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_plot(args) -> int:
    try:
        cert = _load(args)
    except MalformedCertificate as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    fmt = args.format
    if fmt is None:
        fmt = "tikz" if (args.out or "").endswith(".tex") else "svg"
    _emit(args, render_tikz(cert) if fmt == "tikz" else render_svg(cert))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qeuclid", description="Exact M1-Euclidean division in Z[sqrt(m)].")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json"), default="text", m_required=True):
        p.add_argument("-m", type=int, required=m_required, help="squarefree m of Q(sqrt(m))")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("divide", help="quotient gamma with |Norm(xi - gamma)| <= M1")
    common(p)
    p.add_argument("--xi", required=True, help="coordinates a,b of xi = a + b*sqrt(m), e.g. 1/2,5/14")
    p.add_argument("--all-pairs", action="store_true", help="scan every pair and keep the smallest |norm|")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("gcd", help="gcd by repeated M1-division")
    common(p)
    p.add_argument("--alpha", required=True, help="x,y for x + y*sqrt(m)")
    p.add_argument("--beta", required=True, help="x,y for x + y*sqrt(m)")
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("coverset", help="pairs (u,v), |u|,|v| <= B, covering a point")
    common(p)
    p.add_argument("--p", required=True, help="point a,b in [0,1/2]^2")
    p.add_argument("--bound", type=int, default=100)
    p.set_defaults(func=cmd_coverset)

    p = sub.add_parser("search", help="build a covering certificate by greedy search")
    common(p)
    p.add_argument("--M", help="bound to certify instead of the builtin M1 (p/q)")
    p.add_argument("--bound", type=int, help="box for candidate pairs (default 100, 1000 for m=19)")
    p.add_argument("--budget", type=int, default=30, help="maximum number of search steps")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a covering certificate")
    common(p, m_required=False)
    p.add_argument("certificate", nargs="?", help="certificate file (default: shipped one for -m)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="draw a certificate as SVG or TikZ")
    common(p, formats=("svg", "tikz"), default=None, m_required=False)
    p.add_argument("certificate", nargs="?", help="certificate file (default: shipped one for -m)")
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
