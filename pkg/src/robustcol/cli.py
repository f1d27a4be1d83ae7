"""Command-line front end.

Subcommands: ``generate``, ``compute``, ``verify``, ``construct`` and
``crosscheck``.  Exit codes: 0 success, 1 verification failure or flagged
crosscheck rows when ``--strict`` is given, 2 usage error, 3 unparseable
input file, 4 domain or size-limit error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import closed_form as cf
from . import constructions as cons
from . import crosscheck as cc
from .errors import DomainError, GraphInputError, ParseError, SizeLimitError
from .families import (
    FamilyDescriptor,
    gen_complete_multipartite,
    gen_kneser,
    gen_path_power,
    gen_r_tower,
    gen_random_chordal,
    gen_split_tight,
    gen_threshold,
    threshold_descriptor,
    threshold_partition,
)
from .fileformats import (
    format_annotations,
    format_coloring_certificate,
    format_graph,
    format_independence_certificate,
    parse_certificate,
    parse_graph,
)
from .graph import (
    Graph,
    chromatic_number,
    clique_number,
    independence_number,
    is_bipartite,
    is_chordal,
)
from .oracle import (
    ALPHA1_LIMIT,
    CHI1_LIMIT,
    OMEGA1_LIMIT,
    RobustColoringCertificate,
    alpha1_exact,
    chi1_exact,
    omega1_exact,
    verify_robust_coloring,
    verify_robust_independent,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3, 4

FAMILIES = ("multipartite", "kneser", "rtower", "pathpower", "threshold", "splittight", "chordal")
PARAMS = ("chi1", "alpha1", "omega1", "chi", "alpha", "omega")


class _Instance:
    """A graph plus whatever the generator knows about it."""

    def __init__(self, G: Graph, family: str | None = None, desc: FamilyDescriptor | None = None,
                 tp=None, labels: tuple[str, ...] = ()):
        self.G, self.family, self.desc, self.tp = G, family, desc, tp
        self.labels = labels or (desc.labels if desc else ())


def _sizes(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"--family {args.family} needs " + ", ".join(f"--{m}" for m in missing))


def build_family(args) -> _Instance:
    fam = args.family
    if fam == "multipartite":
        _need(args, "sizes")
        G, desc = gen_complete_multipartite(args.sizes)
        return _Instance(G, fam, desc)
    if fam == "kneser":
        _need(args, "n", "k")
        G, desc = gen_kneser(args.n, args.k)
        return _Instance(G, fam, desc)
    if fam == "rtower":
        _need(args, "k")
        G, desc = gen_r_tower(args.k)
        return _Instance(G, fam, desc)
    if fam == "pathpower":
        _need(args, "n", "p")
        G, desc = gen_path_power(args.n, args.p)
        return _Instance(G, fam, desc)
    if fam == "threshold":
        _need(args, "seq")
        G, tp = gen_threshold(args.seq)
        labels = [""] * G.n
        for i, v in enumerate(tp.clique_order, start=1):
            labels[v] = f"A{i}"
        for i, v in enumerate(tp.independent_order, start=1):
            labels[v] = f"B{i}"
        return _Instance(G, fam, threshold_descriptor(args.seq), tp, tuple(labels))
    if fam == "splittight":
        _need(args, "t")
        G, desc = gen_split_tight(args.t)
        labels = [""] * G.n
        for v in desc.extra["clique"]:
            labels[v] = "clique"
        for v in desc.extra["independent"]:
            labels[v] = "independent"
        return _Instance(G, fam, desc, labels=tuple(labels))
    if fam == "chordal":
        _need(args, "n")
        G, desc = gen_random_chordal(args.n, args.density, args.seed)
        return _Instance(G, fam, desc)
    raise DomainError(f"unknown family {fam!r}")


def load_instance(args) -> _Instance:
    if args.graph is not None and args.family is not None:
        raise DomainError("give either --graph or --family, not both")
    if args.graph is not None:
        return _Instance(parse_graph(Path(args.graph).read_text()))
    if args.family is not None:
        return build_family(args)
    raise DomainError("an input graph is required: --graph FILE or --family NAME")


# --------------------------------------------------------------------------
# compute


def _formula(inst: _Instance, param: str, mode: str) -> tuple[int, str, str]:
    """(value, clause, mode) from the closed forms that apply to ``inst``."""
    G, fam, desc = inst.G, inst.family, inst.desc
    if param == "chi1":
        if fam == "multipartite":
            r = cf.chi1_multipartite(desc.params["sizes"], mode)
            return r.value, r.clause, mode
        if fam == "rtower":
            return cf.chi1_r_tower(desc.params["k"]), "r-tower", "-"
        if fam == "splittight":
            return cf.chi1_split_upper(desc.params["t"]), "split-tight", "-"
        tp = inst.tp
        if tp is None and fam is None:
            if is_bipartite(G):
                return cf.chi1_bipartite(G), "bipartite", "-"
            try:
                tp = threshold_partition(G)
            except DomainError:
                tp = None
        if tp is not None:
            r = cf.chi1_threshold(G, tp)
            return r.value, r.clause, "-"
    elif param == "alpha1":
        if fam == "kneser":
            r = cf.alpha1_kneser(desc.params["n"], desc.params["k"])
            return r.value, r.clause, "-"
    elif param == "omega1":
        if fam == "rtower":
            return cf.chi1_r_tower(desc.params["k"]), "r-tower", "-"
    raise DomainError(f"no closed formula for {param} on this input")


def _construction(inst: _Instance, target: str, variant: str):
    G, fam, desc = inst.G, inst.family, inst.desc
    if target == "chi1":
        if fam == "multipartite":
            return cons.construct_multipartite_coloring(desc.params["sizes"])
        if fam == "threshold":
            return cons.construct_threshold_coloring(G, inst.tp)
        if fam == "splittight":
            return cons.construct_split_coloring(G, desc.extra["clique"], desc.extra["independent"])
        if fam == "pathpower":
            return cons.construct_unit_interval_coloring(desc.params["n"], desc.params["p"])
        if fam == "kneser":
            return cons.construct_kneser_chi1(desc.params["n"], desc.params["k"])
        if is_chordal(G):
            return cons.construct_chordal_half(G)
        raise DomainError("no chi1 construction for this input (needs a family or a chordal graph)")
    if target == "alpha1":
        if fam != "kneser":
            raise DomainError("alpha1 constructions exist only for --family kneser")
        n, k = desc.params["n"], desc.params["k"]
        if variant == "star-plus-two":
            if n != 3 * k:
                raise DomainError(f"the star-plus-two family lives in KG(3k,k); got n={n}, k={k}")
            return cons.construct_kneser_3k_family(k)
        return cons.construct_kneser_alpha1(n, k)
    raise DomainError(f"no construction for {target}")


def _write_cert(path: str | None, n: int, cert) -> None:
    if path is None:
        return
    if isinstance(cert, RobustColoringCertificate):
        Path(path).write_text(format_coloring_certificate(n, cert))
    else:
        Path(path).write_text(format_independence_certificate(n, cert))


def cmd_compute(args) -> int:
    inst = load_instance(args)
    G, param = inst.G, args.param
    if args.method == "formula":
        value, clause, mode = _formula(inst, param, args.mode)
        print(f"{param} {value} clause={clause} mode={mode}")
        return EXIT_OK
    if args.method == "construction":
        if param not in ("chi1", "alpha1"):
            raise DomainError("constructions exist for chi1 and alpha1 only")
        cert = _construction(inst, param, args.variant)
        verdict = (verify_robust_coloring(G, cert) if param == "chi1"
                   else verify_robust_independent(G, cert))
        if not verdict:
            print(verdict.render(base=1), file=sys.stderr)
            return EXIT_FAIL
        _write_cert(args.cert_out, G.n, cert)
        print(f"{param} {cert.num_blocks if param == 'chi1' else cert.size}")
        return EXIT_OK

    limit = args.limit_n
    if param == "chi1":
        value, cert = chi1_exact(G, limit or CHI1_LIMIT)
        _write_cert(args.cert_out, G.n, cert)
    elif param == "alpha1":
        value, cert = alpha1_exact(G, limit or ALPHA1_LIMIT)
        _write_cert(args.cert_out, G.n, cert)
    elif param == "omega1":
        value, _ = omega1_exact(G, limit or OMEGA1_LIMIT)
    elif param == "chi":
        value = chromatic_number(G, limit)[0] if limit else chromatic_number(G)[0]
    elif param == "alpha":
        value = independence_number(G, limit)[0] if limit else independence_number(G)[0]
    else:
        value = clique_number(G, limit)[0] if limit else clique_number(G)[0]
    print(f"{param} {value}")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify / generate / construct / crosscheck


def cmd_verify(args) -> int:
    G = parse_graph(Path(args.graph).read_text())
    n, cert = parse_certificate(Path(args.cert).read_text())
    if n != G.n:
        print(f"FAIL vertex-count certificate={n} graph={G.n}")
        return EXIT_FAIL
    if isinstance(cert, RobustColoringCertificate):
        verdict = verify_robust_coloring(G, cert)
    else:
        verdict = verify_robust_independent(G, cert)
    print(verdict.render(base=1))
    return EXIT_OK if verdict else EXIT_FAIL


def _emit_graph(inst: _Instance, out: str | None, annotations: str | None) -> None:
    comments = [inst.desc.tag()] if inst.desc else []
    text = format_graph(inst.G, comments)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    if annotations and inst.labels:
        Path(annotations).write_text(format_annotations(inst.labels))


def cmd_generate(args) -> int:
    inst = build_family(args)
    _emit_graph(inst, args.out, args.annotations)
    return EXIT_OK


def cmd_construct(args) -> int:
    inst = build_family(args)
    cert = _construction(inst, args.target, args.variant)
    G = inst.G
    verdict = (verify_robust_coloring(G, cert) if args.target == "chi1"
               else verify_robust_independent(G, cert))
    if not verdict:
        print(verdict.render(base=1), file=sys.stderr)
        return EXIT_FAIL
    if args.graph_out:
        _emit_graph(inst, args.graph_out, args.annotations)
    _write_cert(args.cert_out, G.n, cert)
    print(f"{args.target} {cert.num_blocks if args.target == 'chi1' else cert.size}")
    return EXIT_OK


# suite -> (keyword for --limit-n, keyword for --count)
_SUITE_KNOBS = {
    "removable-lemma": ("limit_n", None),
    "definition": ("limit_n", None),
    "bounds": ("limit_n", "random_count"),
    "threshold": ("max_len", None),
    "multipartite": ("max_total", None),
    "tripartite": ("max_total", None),
    "bipartite": ("max_n", "random_count"),
    "chordal": ("max_n", "count"),
    "split": ("random_max_n", "random_count"),
    "rtower": ("omega_max_n", None),
    "unitinterval": ("max_n", "random_subsets"),
    "kneser": ("max_n_k2", None),
}
_SEEDED = {"bounds", "bipartite", "chordal", "split", "unitinterval"}


def run_suite(name: str, limit_n: int | None = None, limit_edges: int | None = None,
              count: int | None = None, seed: int | None = None,
              mode: str | None = None) -> cc.Report:
    kwargs = {}
    n_key, count_key = _SUITE_KNOBS[name]
    if limit_n is not None:
        kwargs[n_key] = limit_n
    if count is not None:
        if count_key is None:
            raise DomainError(f"suite {name} has no random part; --count does not apply")
        kwargs[count_key] = count
    if seed is not None:
        if name not in _SEEDED:
            raise DomainError(f"suite {name} is not randomized; --seed does not apply")
        kwargs["seed"] = seed
    if limit_edges is not None:
        if name != "removable-lemma":
            raise DomainError("--limit-edges applies to the removable-lemma suite only")
        kwargs["limit_edges"] = limit_edges
    if mode is not None:
        if name != "multipartite":
            raise DomainError("--mode applies to the multipartite suite only")
        kwargs["modes"] = (mode,)
    return cc.SUITES[name](**kwargs)


def cmd_crosscheck(args) -> int:
    report = run_suite(args.suite, args.limit_n, args.limit_edges, args.count, args.seed,
                       args.mode)
    text = report.text()
    if args.out:
        Path(args.out).write_text(text)
        print(text.splitlines()[-1])
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if args.strict and report.flagged() else EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def _add_family_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--sizes", type=_sizes, help="multipartite part sizes, ascending, e.g. 1,2,3")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int, help="path power exponent")
    p.add_argument("--t", type=int, help="split-tight clique size")
    p.add_argument("--seq", help="threshold creation sequence: i isolated, d/D dominating")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=cc.DEFAULT_SEED)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="robustcol",
                                     description="Robust colouring parameters: exact values, "
                                                 "closed forms, certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a family graph in DIMACS-like format")
    _add_family_flags(g, required=True)
    g.add_argument("--out", help="graph file (default stdout)")
    g.add_argument("--annotations", help="sidecar file with vertex labels")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("compute", help="compute a parameter")
    c.add_argument("--graph", help="input graph file")
    _add_family_flags(c, required=False)
    c.add_argument("--param", choices=PARAMS, required=True)
    c.add_argument("--method", choices=("oracle", "formula", "construction"), default="oracle")
    c.add_argument("--mode", choices=cf.MODES, default=cf.ORACLE_VALIDATED)
    c.add_argument("--variant", choices=("star", "star-plus-two"), default="star",
                   help="Kneser alpha1 construction")
    c.add_argument("--limit-n", type=int, help="raise or lower the exact solver's vertex limit")
    c.add_argument("--cert-out", help="write the certificate here")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cert", required=True)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("construct", help="build and verify a certificate for a family")
    _add_family_flags(k, required=True)
    k.add_argument("--target", choices=("chi1", "alpha1"), required=True)
    k.add_argument("--variant", choices=("star", "star-plus-two"), default="star")
    k.add_argument("--graph-out")
    k.add_argument("--annotations")
    k.add_argument("--cert-out")
    k.set_defaults(func=cmd_construct)

    x = sub.add_parser("crosscheck", help="run a cross-validation suite")
    x.add_argument("--suite", choices=sorted(cc.SUITES), required=True)
    x.add_argument("--limit-n", type=int)
    x.add_argument("--limit-edges", type=int)
    x.add_argument("--count", type=int, help="number of random instances")
    x.add_argument("--seed", type=int)
    x.add_argument("--mode", choices=cf.MODES)
    x.add_argument("--out", help="report file (default stdout)")
    x.add_argument("--strict", action="store_true", help="exit 1 if any row is flagged")
    x.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
