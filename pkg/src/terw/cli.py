"""Command-line front end.

Subcommands: ``info``, ``classes``, ``chartable``, ``dims``, ``wedderburn``,
``verify`` (everything, oracles forced on), and ``sweep`` (iterate a family
over a parameter range, one CSV row per instance).  A group is described by
flags or a JSON spec file with fields ``kind`` (general | dihedral |
dicyclic | g2), ``factors`` (list of [p, e]), ``s``/``y`` (vectors for the
general and dicyclic kinds), and ``n``/``s``/``t`` integers for the g2 kind;
flags override file values.  Exit codes: 0 success, 1 invalid spec, 2
verification mismatch, 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .abelian import canonical_factor_order, make_abelian, make_involution
from .characters import character_table, verify_orthogonality
from .conjugacy import conjugacy_classes, conjugacy_classes_bruteforce
from .errors import (
    GuardExceededError,
    InvalidGroupError,
    TerwError,
    VerificationFailure,
)
from .groups import D2Group, dicyclic, dihedral, g2_group, make_d2
from .limits import DEFAULT_MATRIX_GUARD, MIN_GUARD
from .scheme import (
    dim_closed_form,
    dump_matrices,
    is_triply_transitive,
    verify_scheme_axioms,
)
from .wedderburn import (
    multiplicities_inner_product,
    verify_central_idempotents,
    wedderburn_report,
)

EXIT_OK = 0
EXIT_INVALID_SPEC = 1
EXIT_MISMATCH = 2
EXIT_GUARD = 3


@dataclass
class GroupSpec:
    """Parsed description of one group instance."""

    kind: str
    factors: list[list[int]] | None = None
    s: Any = None  # vector for general, integer for g2
    y: list[int] | None = None
    n: int | None = None
    t: int | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.factors is not None:
            out["factors"] = self.factors
        if self.s is not None:
            out["s"] = self.s
        if self.y is not None:
            out["y"] = self.y
        if self.n is not None:
            out["n"] = self.n
        if self.t is not None:
            out["t"] = self.t
        return out

    @staticmethod
    def from_dict(data: dict) -> "GroupSpec":
        kind = data.get("kind")
        if kind not in ("general", "dihedral", "dicyclic", "g2"):
            raise InvalidGroupError(f"unknown kind {kind!r}")
        spec = GroupSpec(kind=kind)
        if "factors" in data:
            spec.factors = [[int(p), int(e)] for p, e in data["factors"]]
        if "s" in data:
            spec.s = data["s"]
        if "y" in data:
            spec.y = [int(v) for v in data["y"]]
        if "n" in data:
            spec.n = int(data["n"])
        if "t" in data:
            spec.t = int(data["t"])
        return spec

    def build(self) -> D2Group:
        if self.kind == "dihedral":
            if not self.factors:
                raise InvalidGroupError("dihedral needs --factors")
            return dihedral([tuple(f) for f in self.factors])
        if self.kind == "dicyclic":
            if not self.factors or self.y is None:
                raise InvalidGroupError("dicyclic needs --factors and --y")
            return dicyclic([tuple(f) for f in self.factors], self.y)
        if self.kind == "g2":
            if self.n is None or self.s is None or self.t is None:
                raise InvalidGroupError("g2 needs --n, --s and --t")
            return g2_group(self.n, int(self.s), self.t)
        if not self.factors or self.s is None:
            raise InvalidGroupError("general needs --factors and --s")
        factors = [tuple(f) for f in self.factors]
        group = make_abelian(factors)
        # user vectors follow the given factor order; permute along with it
        perm = canonical_factor_order(factors)
        if len(self.s) != group.rank:
            raise InvalidGroupError(f"--s needs {group.rank} coordinates")
        s = [int(self.s[i]) for i in perm]
        twist = make_involution(group, s)
        y = [0] * group.rank
        if self.y is not None:
            if len(self.y) != group.rank:
                raise InvalidGroupError(f"--y needs {group.rank} coordinates")
            y = [self.y[i] for i in perm]
        return make_d2(group, twist, y)


@dataclass
class RunConfig:
    fmt: str = "text"
    oracle: bool = False
    guard: int = DEFAULT_MATRIX_GUARD
    out: str | None = None
    dump_matrices: str | None = None

    def __post_init__(self):
        if self.guard < MIN_GUARD:
            raise InvalidGroupError(f"guard must be >= {MIN_GUARD}")


# -- parsing -------------------------------------------------------------------


def _parse_factors(text: str) -> list[list[int]]:
    text = text.strip()
    if text.startswith("["):
        return [[int(p), int(e)] for p, e in json.loads(text)]
    out = []
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            p, e = token.split("^")
            out.append([int(p), int(e)])
        else:
            out.append([int(token), 1])
    return out


def _parse_int_vector(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="terw",
        description="Association scheme and Terwilliger-algebra computations "
        "for groups with an abelian subgroup of index 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, spec_flags: bool = True):
        if spec_flags:
            p.add_argument("--spec", help="JSON file with the group description")
            p.add_argument("--kind", choices=["general", "dihedral", "dicyclic", "g2"])
            p.add_argument("--factors", help='factor list, e.g. "2^2,3" or "[[2,2],[3,1]]"')
            p.add_argument("--s", help="twist vector (general) or integer (g2)")
            p.add_argument("--y", help="square of b as an exponent vector")
            p.add_argument("--n", type=int, help="cyclic order (g2)")
            p.add_argument("--t", type=int, help="exponent of b^2 (g2)")
        p.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")
        p.add_argument("--oracle", action="store_true", help="force brute-force cross-checks")
        p.add_argument(
            "--guard",
            type=int,
            default=None,
            help="max group order for matrix paths (default 64, env TERW_GUARD)",
        )
        p.add_argument("--out", help="write the report to this file instead of stdout")

    for name, doc in [
        ("info", "group invariants: n, d, per-factor d_i/n_i, lambda, mu"),
        ("classes", "conjugacy classes"),
        ("chartable", "character table"),
        ("dims", "all dimension paths and the triple-transitivity verdict"),
        ("wedderburn", "block multiplicities three ways"),
        ("verify", "run every check with oracles forced on"),
    ]:
        p = sub.add_parser(name, help=doc)
        add_common(p)
        if name == "classes":
            p.add_argument(
                "--dump-matrices",
                help="also write the scheme matrices and dual idempotents to this file",
            )

    p = sub.add_parser("sweep", help="iterate a family over a parameter range (CSV rows)")
    p.add_argument("--kind", choices=["dihedral", "dicyclic", "g2"], required=True)
    p.add_argument("--range", required=True, help="LO:HI inclusive parameter range")
    p.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="csv")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--out", help="write the report to this file instead of stdout")
    return parser


def _load_spec(args: argparse.Namespace) -> GroupSpec:
    data: dict = {}
    if getattr(args, "spec", None):
        with open(args.spec) as fh:
            data = json.load(fh)
    if getattr(args, "kind", None):
        data["kind"] = args.kind
    if getattr(args, "factors", None):
        data["factors"] = _parse_factors(args.factors)
    if getattr(args, "s", None) is not None:
        raw = args.s
        data["s"] = int(raw) if data.get("kind") == "g2" else _parse_int_vector(raw)
    if getattr(args, "y", None) is not None:
        data["y"] = _parse_int_vector(args.y)
    if getattr(args, "n", None) is not None:
        data["n"] = args.n
    if getattr(args, "t", None) is not None:
        data["t"] = args.t
    if "kind" not in data:
        raise InvalidGroupError("no group kind given (flag --kind or spec file)")
    return GroupSpec.from_dict(data)


def _config(args: argparse.Namespace) -> RunConfig:
    guard = args.guard
    if guard is None:
        guard = int(os.environ.get("TERW_GUARD", DEFAULT_MATRIX_GUARD))
    return RunConfig(
        fmt=args.fmt,
        oracle=args.oracle,
        guard=guard,
        out=args.out,
        dump_matrices=getattr(args, "dump_matrices", None),
    )


# -- payload rendering -----------------------------------------------------------


def _emit(payload: Any, config: RunConfig, text_renderer=None, csv_renderer=None) -> None:
    if config.fmt == "json":
        body = json.dumps(payload, indent=2) + "\n"
    elif config.fmt == "csv":
        if csv_renderer is None:
            raise InvalidGroupError("this command has no CSV form")
        body = csv_renderer(payload)
    else:
        body = text_renderer(payload) if text_renderer else json.dumps(payload, indent=2) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _elem(g) -> list:
    a, beta = g
    return [list(a), beta]


# -- commands ---------------------------------------------------------------------


def cmd_info(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    fx = group.fixed
    payload = {
        "spec": spec.to_dict(),
        "name": group.name,
        "order": group.order,
        "n": group.n,
        "d": group.d,
        "d_i": list(fx.d_vec),
        "n_i": list(fx.n_vec),
        "lambda": group.abelian.lam,
        "mu": group.abelian.mu,
        "fixed_subgroup_size": group.d,
        "twisted_subgroup_size": fx.twisted_size,
    }

    def text(p):
        lines = [f"{k}: {v}" for k, v in p.items() if k != "spec"]
        return "\n".join(lines) + "\n"

    def as_csv(p):
        buf = io.StringIO()
        w = csv.writer(buf)
        keys = [k for k in p if k != "spec"]
        w.writerow(keys)
        w.writerow([p[k] for k in keys])
        return buf.getvalue()

    _emit(payload, config, text, as_csv)
    return EXIT_OK


def cmd_classes(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    classes = conjugacy_classes(group)
    if config.oracle:
        brute = conjugacy_classes_bruteforce(group, guard=config.guard)
        if [c.elements for c in brute] != [c.elements for c in classes]:
            return _mismatch(
                {"identity": "closed-form vs brute-force classes", "group": group.name},
                config,
            )
    payload = {
        "spec": spec.to_dict(),
        "name": group.name,
        "order": group.order,
        "counts": dict(zip(("fixed", "paired", "coset"), classes.counts)),
        "classes": [
            {
                "index": c.index,
                "kind": c.kind,
                "size": c.size,
                "rep": _elem(c.rep),
                "elements": [_elem(g) for g in c.elements],
            }
            for c in classes
        ],
    }
    if config.dump_matrices:
        with open(config.dump_matrices, "w") as fh:
            fh.write(dump_matrices(group, classes, guard=config.guard))

    def text(p):
        lines = [f"{p['name']}: {len(p['classes'])} classes {p['counts']}"]
        for c in p["classes"]:
            lines.append(f"  [{c['index']:>2}] {c['kind']:<6} size {c['size']:>3} rep {c['rep']}")
        return "\n".join(lines) + "\n"

    def as_csv(p):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["index", "kind", "size", "rep"])
        for c in p["classes"]:
            w.writerow([c["index"], c["kind"], c["size"], json.dumps(c["rep"])])
        return buf.getvalue()

    _emit(payload, config, text, as_csv)
    return EXIT_OK


def cmd_chartable(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    table = character_table(group)
    if config.oracle:
        verify_orthogonality(table)
    if config.fmt == "json":
        payload = {"spec": spec.to_dict(), "name": group.name, **table.to_json_dict()}
        _emit(payload, config)
    elif config.fmt == "csv":
        _write_text(table.to_csv(), config)
    else:
        _write_text(table.to_text() + "\n", config)
    return EXIT_OK


def cmd_dims(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    report = is_triply_transitive(group, guard=config.guard, need_closure=config.oracle)
    dims = {
        "dim_t0": report.dim_t0,
        "dim_closed_form": report.dim_closed_form,
        "dim_centralizer": report.dim_centralizer,
        "dim_closure": report.dim_closure,
    }
    payload = {
        "spec": spec.to_dict(),
        "name": group.name,
        "order": group.order,
        **dims,
        "triply_transitive": report.triply_transitive,
    }
    computed = [v for v in dims.values() if v is not None]
    if len(set(computed)) != 1 or not report.triply_transitive:
        return _mismatch({"identity": "dimension paths disagree", **payload}, config)

    def text(p):
        vals = ", ".join(
            f"{k}={p[k]}" for k in dims
        )
        return f"{p['name']}: {vals}, triply_transitive={p['triply_transitive']}\n"

    def as_csv(p):
        buf = io.StringIO()
        w = csv.writer(buf)
        keys = ["name", "order", *dims.keys(), "triply_transitive"]
        w.writerow(keys)
        w.writerow([p[k] for k in keys])
        return buf.getvalue()

    _emit(payload, config, text, as_csv)
    return EXIT_OK


def cmd_wedderburn(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    report = wedderburn_report(group)
    payload = {"spec": spec.to_dict(), **report.to_json_dict()}

    def text(p):
        lines = [
            f"{p['group']}: blocks {p['blocks']}",
            f"sum d^2 = {p['sum_d_squared']} = centralizer dim {p['centralizer_dim']}",
            f"sum d*deg = {p['sum_d_times_degree']} = |G| = {p['order']}",
        ]
        for c in p["characters"]:
            lines.append(f"  {c['label']:<16} deg {c['degree']}  mult {c['multiplicity']}")
        return "\n".join(lines) + "\n"

    def as_csv(p):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["label", "degree", "multiplicity"])
        for c in p["characters"]:
            w.writerow([c["label"], c["degree"], c["multiplicity"]])
        return buf.getvalue()

    _emit(payload, config, text, as_csv)
    return EXIT_OK


def cmd_verify(spec: GroupSpec, config: RunConfig) -> int:
    group = spec.build()
    checks: list[dict] = []
    failures = 0

    def run(name: str, fn) -> None:
        nonlocal failures
        try:
            fn()
            checks.append({"check": name, "ok": True})
        except VerificationFailure as exc:
            failures += 1
            checks.append({"check": name, "ok": False, "detail": str(exc)})

    classes = conjugacy_classes(group)

    def check_classes():
        brute = conjugacy_classes_bruteforce(group, guard=config.guard)
        if [c.elements for c in brute] != [c.elements for c in classes]:
            raise VerificationFailure("closed-form and brute-force partitions differ")

    run("conjugacy_classes", check_classes)
    run("scheme_axioms", lambda: verify_scheme_axioms(group, classes, guard=config.guard))
    table = character_table(group, classes)
    run("orthogonality", lambda: verify_orthogonality(table))

    def check_dims():
        report = is_triply_transitive(group, classes, guard=config.guard, need_closure=True)
        values = {report.dim_t0, report.dim_closed_form, report.dim_centralizer, report.dim_closure}
        if len(values) != 1:
            raise VerificationFailure(f"dimension paths disagree: {report.as_tuple()}")

    run("dimensions", check_dims)
    wreport = {}

    def check_wedderburn():
        wreport["report"] = wedderburn_report(group, classes, table)

    run("wedderburn", check_wedderburn)
    if "report" in wreport:
        run(
            "central_idempotents",
            lambda: verify_central_idempotents(
                group,
                table,
                multiplicities_inner_product(group, table),
                guard=config.guard,
            ),
        )

    payload = {
        "spec": spec.to_dict(),
        "name": group.name,
        "order": group.order,
        "checks": checks,
        "ok": failures == 0,
    }
    if failures:
        return _mismatch(payload, config)

    def text(p):
        lines = [f"{p['name']}: all {len(p['checks'])} checks passed"]
        lines.extend(f"  ok {c['check']}" for c in p["checks"])
        return "\n".join(lines) + "\n"

    _emit(payload, config, text)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    lo, hi = (int(v) for v in args.range.split(":"))
    rows = []
    mismatches = 0
    for spec in _sweep_specs(args.kind, lo, hi):
        group = spec.build()
        report = is_triply_transitive(group, guard=config.guard)
        wed_ok = True
        try:
            wedderburn_report(group)
        except VerificationFailure:
            wed_ok = False
        dims = [report.dim_t0, report.dim_closed_form, report.dim_centralizer]
        if report.dim_closure is not None:
            dims.append(report.dim_closure)
        ok = report.triply_transitive and len(set(dims)) == 1 and wed_ok
        if not ok:
            mismatches += 1
        rows.append(
            {
                "kind": spec.kind,
                "params": json.dumps(spec.to_dict()),
                "order": group.order,
                "n": group.n,
                "d": group.d,
                "dim_t0": report.dim_t0,
                "dim_closed_form": report.dim_closed_form,
                "dim_centralizer": report.dim_centralizer,
                "dim_closure": report.dim_closure,
                "triply_transitive": report.triply_transitive,
                "wedderburn_ok": wed_ok,
            }
        )

    def as_csv(payload):
        buf = io.StringIO()
        w = csv.writer(buf)
        keys = list(payload[0].keys()) if payload else []
        w.writerow(keys)
        for row in payload:
            w.writerow([row[k] for k in keys])
        return buf.getvalue()

    def text(payload):
        return as_csv(payload)

    _emit(rows, config, text, as_csv)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _sweep_specs(kind: str, lo: int, hi: int) -> list[GroupSpec]:
    from .groups import factorize
    from .instances import g2_parameter_triples

    specs = []
    if kind == "dihedral":
        for n in range(max(lo, 3), hi + 1):
            specs.append(GroupSpec(kind="dihedral", factors=[[p, e] for p, e in factorize(n)]))
    elif kind == "dicyclic":
        for n in range(max(lo, 4), hi + 1):
            if n % 2:
                continue
            factors = [[p, e] for p, e in factorize(n)]
            group = make_abelian([tuple(f) for f in factors])
            y = [(m // 2 if m % 2 == 0 else 0) for m in group.moduli]
            specs.append(GroupSpec(kind="dicyclic", factors=factors, y=y))
    else:
        for n, s, t in g2_parameter_triples(hi):
            if n >= lo:
                specs.append(GroupSpec(kind="g2", n=n, s=s, t=t))
    return specs


def _mismatch(payload: dict, config: RunConfig) -> int:
    payload = {"mismatch": True, **payload}
    body = json.dumps(payload, indent=2) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_MISMATCH


def _write_text(body: str, config: RunConfig) -> None:
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config(args)
        if args.command == "sweep":
            return cmd_sweep(args, config)
        spec = _load_spec(args)
        handler = {
            "info": cmd_info,
            "classes": cmd_classes,
            "chartable": cmd_chartable,
            "dims": cmd_dims,
            "wedderburn": cmd_wedderburn,
            "verify": cmd_verify,
        }[args.command]
        return handler(spec, config)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VerificationFailure as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (TerwError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_SPEC


if __name__ == "__main__":
    sys.exit(main())
