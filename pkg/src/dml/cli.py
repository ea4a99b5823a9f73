"""Command-line entry point: ``dml <command> [options]``.

Each command prints one JSON object on stdout; commands that produce tables
also write a CSV file when ``--output`` is given.  Failures print a JSON
error record on stderr and exit with status 1 (bad input) or 2 (bad usage).
"""

import argparse
import json
import sys

from . import densities, io, moments, tables
from .exact import format_rational, parse_rational, to_mpf
from .precision import ENV_VAR, check_digits, context, default_digits

DEFAULT_SEED = 20240601
RING_ALPHA = {"real": "1/2", "complex": "1", "quaternion": "2"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _decimal(q, digits):
    ctx = context(digits)
    return ctx.nstr(to_mpf(q, ctx), digits)


def _digits(args, n_moments=0):
    if args.precision is None:
        return default_digits(n_moments)
    return check_digits(args.precision)


# -- commands --------------------------------------------------------------

def cmd_moment(args):
    a, n, k = args.alpha, args.n, args.k
    v = args.variable
    if v == "det":
        q = moments.f0_det_moment(a, k)
    elif v == "pt":
        q = moments.pt_moment(a, n)
    elif v == "bivariate":
        q = moments.bivariate_moment(a, n, k)
    elif v == "product":
        q = moments.product_moment(a, n)
    elif v == "ratio":
        q = moments.f1_adjustment(a, n, k)
    elif v == "central":
        q = moments.f2_central_adjustment(a, n, k)
    elif v == "sixbysix":
        q = moments.sixbysix_adjustment(args.kind, n, k)
    else:
        q = moments.nongeneric_moment(args.beta, n, k)
    digits = _digits(args)
    return {"exact": format_rational(q), "decimal": _decimal(q, digits)}, digits, None


def cmd_table(args):
    digits = _digits(args)
    compute = {"rebit-pt": lambda n: moments.pt_moment("1/2", n),
               "rebit-product": lambda n: moments.product_moment("1/2", n)}.get(args.table)
    ns = [args.n] if args.n else [n for n, _ in tables.table_rows(args.table)]
    rows = []
    for n in ns:
        stored = tables.table_lookup(args.table, n)
        row = {"n": n, "exact": format_rational(stored), "decimal": _decimal(stored, digits)}
        if compute:
            row["recomputed_equal"] = compute(n) == stored
        rows.append(row)
    return {"table": args.table, "rows": rows}, digits, None


def cmd_numerator(args):
    p = moments.numerator_polynomial(args.family, args.n)
    coeffs = [format_rational(c) for c in p.coefficients]
    return {"family": args.family, "n": args.n, "coefficients_ascending": coeffs}, None, None


def cmd_estimate(args):
    from .reconstruct import separability_estimate

    rec = separability_estimate(args.alpha, args.variable, args.num_moments, _digits(args, args.num_moments),
                                args.method, workers=args.threads)
    out = rec.as_dict()
    return out, rec.precision_digits, None


QUADRATURE_SCALE = {"ptdet": 16, "product": 1, "det": 256}


def cmd_quadrature(args):
    from .reconstruct import build_moment_sequence, gauss_rule, positive_zeros, quadrature_threshold_probability

    digits = _digits(args, 2 * args.nodes)
    ms = build_moment_sequence(args.alpha, args.variable, 2 * args.nodes - 1, digits)
    rule = gauss_rule(ms, args.nodes, digits, method=args.method)
    ctx = context(digits)
    scale = QUADRATURE_SCALE[args.variable]
    nodes = [x * scale for x in rule.nodes_on()]
    prob = quadrature_threshold_probability(rule, ms.threshold)
    summary = {
        "prob_above_threshold": ctx.nstr(prob, 15),
        "positive_nodes": positive_zeros(rule, ms.threshold),
        "epsilon_max": ctx.nstr(rule.max_error, 5),
        "within_tolerance": rule.within_tolerance,
        "node_scale": scale,
    }
    return summary, digits, lambda meta: io.quadrature_csv(nodes, rule.weights, rule.max_error, meta)


def _mc_exact(args):
    if args.ensemble == "nongeneric":
        return moments.nongeneric_moment(args.beta, args.n, args.k)
    if args.measure == "hs" and args.d == 4:
        return moments.bivariate_moment(RING_ALPHA[args.ensemble], args.n, args.k)
    if args.measure == "hs" and args.d == 6 and args.ensemble != "quaternion" and args.k == 0 and args.n == 1:
        kind = "rebit_retrit" if args.ensemble == "real" else "qubit_qutrit"
        return moments.sixbysix_adjustment(kind, 1, 0)
    if args.measure == "bures" and args.ensemble == "real" and args.n == 0:
        return densities.density_moment_exact("bures", args.k) / 256**args.k
    return None


def cmd_mc(args):
    from .sampler import (RngStream, mc_joint_moments, mc_separability_probability,
                          nongeneric_mc_moment, nongeneric_separability_probability)

    rng = RngStream(args.seed)
    if args.ensemble == "nongeneric":
        if args.beta is None:
            raise UsageError("--ensemble nongeneric needs --beta")
        if args.quantity == "separability":
            stats = nongeneric_separability_probability(args.beta, args.samples, rng, args.threads)
        else:
            stats = nongeneric_mc_moment(args.beta, args.n, args.k, args.samples, rng)
    elif args.quantity == "separability":
        if args.d != 4:
            raise UsageError("separability sampling is for d = 4")
        stats = mc_separability_probability(args.ensemble, args.measure, args.samples, rng, args.threads)
    else:
        stats = mc_joint_moments(args.ensemble, args.measure, [(args.n, args.k)], args.samples, rng,
                                 args.d, args.threads)[(args.n, args.k)]
    out = {k: (repr(v) if isinstance(v, float) else v) for k, v in stats.as_dict().items()}
    if args.quantity == "moment":
        exact = _mc_exact(args)
        if exact is not None:
            out["exact"] = format_rational(exact)
            out["z_score"] = repr((stats.mean - float(exact)) / stats.stderr)
    return out, None, None


def cmd_hist(args):
    from .sampler import RngStream, joint_histogram

    h = joint_histogram(args.ensemble, args.samples, args.bins, RngStream(args.seed), args.measure, args.threads)
    summary = {"samples": h.samples, "total": h.total, "bins": args.bins}
    return summary, None, lambda meta: io.histogram_csv(h, meta)


def cmd_density(args):
    summary = {
        "crossing_point": repr(densities.crossing_point()),
        "normalization_hs": repr(densities.normalization("hs")),
        "normalization_bures": repr(densities.normalization("bures")),
    }
    return summary, None, lambda meta: io.density_csv(densities.density_grid(args.points), meta)


COMMANDS = {
    "moment": cmd_moment,
    "table": cmd_table,
    "numerator": cmd_numerator,
    "estimate": cmd_estimate,
    "quadrature": cmd_quadrature,
    "mc": cmd_mc,
    "hist": cmd_hist,
    "density": cmd_density,
}


def build_parser():
    p = _Parser(prog="dml", description="Determinant moments of random density matrices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, *, precision=False, seed=False, threads=False, output=False):
        sp = sub.add_parser(name, help=help_)
        if precision:
            sp.add_argument("--precision", type=int, default=None,
                            help=f"working digits (min 16; default from ${ENV_VAR} or 64)")
        if seed:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if threads:
            sp.add_argument("--threads", type=int, default=1)
        if output:
            sp.add_argument("--output", default=None, help="CSV path")
        return sp

    sp = add("moment", "exact moment", precision=True)
    sp.add_argument("--alpha", type=_rational_arg, default=parse_rational("1/2"))
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--variable", default="bivariate",
                    choices=["det", "pt", "bivariate", "product", "ratio", "central", "sixbysix", "nongeneric"])
    sp.add_argument("--kind", default="rebit_retrit", choices=["rebit_retrit", "qubit_qutrit"])
    sp.add_argument("--beta", type=_rational_arg, default=parse_rational("1"))

    sp = add("table", "stored reference table", precision=True)
    sp.add_argument("--table", required=True, choices=tables.table_ids())
    sp.add_argument("--n", type=int, default=None)

    sp = add("numerator", "numerator polynomial coefficients")
    sp.add_argument("--family", default="rebit", choices=["rebit", "qubit"])
    sp.add_argument("--n", type=int, default=1)

    sp = add("estimate", "separability estimate from moments", precision=True, threads=True)
    sp.add_argument("--alpha", type=_rational_arg, default=parse_rational("1/2"))
    sp.add_argument("--variable", default="ptdet", choices=["ptdet", "product"])
    sp.add_argument("--num-moments", type=int, default=100)
    sp.add_argument("--method", default="legendre", choices=["legendre", "mnatsakanov", "quadrature"])

    sp = add("quadrature", "Gauss rule from moments", precision=True, output=True)
    sp.add_argument("--alpha", type=_rational_arg, default=parse_rational("1/2"))
    sp.add_argument("--variable", default="ptdet", choices=["ptdet", "product", "det"])
    sp.add_argument("--nodes", type=int, default=20)
    sp.add_argument("--method", default="hankel", choices=["hankel", "recurrence"])

    sp = add("mc", "Monte Carlo estimate", seed=True, threads=True)
    sp.add_argument("--ensemble", default="real", choices=["real", "complex", "quaternion", "nongeneric"])
    sp.add_argument("--measure", default="hs", choices=["hs", "bures"])
    sp.add_argument("--quantity", default="moment", choices=["moment", "separability"])
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--d", type=int, default=4, choices=[4, 6])
    sp.add_argument("--beta", type=_rational_arg, default=None)
    sp.add_argument("--samples", type=int, default=100_000)

    sp = add("hist", "joint histogram of |rho| and |rho^PT|", seed=True, threads=True, output=True)
    sp.add_argument("--ensemble", default="real", choices=["real", "complex", "quaternion"])
    sp.add_argument("--measure", default="hs", choices=["hs", "bures"])
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--bins", type=int, default=100)

    sp = add("density", "closed determinant densities", output=True)
    sp.add_argument("--points", type=int, default=1001)
    return p


def _config(args, digits):
    cfg = {}
    for key, value in sorted(vars(args).items()):
        if hasattr(value, "denominator") and not isinstance(value, int):
            value = format_rational(value)
        cfg[key] = value
    if "precision" in cfg:
        cfg["precision"] = digits
    return cfg


def _fail(kind, message, status):
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}, sort_keys=True) + "\n")
    return status


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    try:
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        if getattr(args, "precision", None) is not None:
            check_digits(args.precision)
        payload, digits, render_csv = COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except (ValueError, KeyError, IndexError, ArithmeticError, TypeError) as exc:
        return _fail(type(exc).__name__, str(exc).strip("'\""), 1)
    meta = io.metadata(_config(args, digits), getattr(args, "seed", None), digits)
    if render_csv is not None and getattr(args, "output", None):
        io.write_text(args.output, render_csv(meta))
        payload = {**payload, "output": args.output}
    sys.stdout.write(io.dumps_json(payload, meta))
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
