"""
Command line interface.

    knarayana narayana -k 3 -r 4 [--method sulanke|determinant|euler]
    knarayana hilbert -k 2 -n 5 [-J 10]
    knarayana schubert 3 4 [-n 4]
    knarayana euler -k 3 -r 5
    knarayana oracle sulanke -k 3 -r 4 [--jobs 4]
    knarayana oracle narayana -a 4 4 -j 2
    knarayana identities [--kmax 4 --rmax 6 --jmax 8 --seed 0]

Every command takes --format plain|json|csv|latex and --out FILE.
Exit codes: 0 ok, 2 internal consistency violation, 64 usage, 65 budget.
"""

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import euler, grassmann, identities, narayana, paths
from .poly import DensePolynomial

EXIT_OK = 0
EXIT_INCONSISTENT = 2
EXIT_USAGE = 64
EXIT_BUDGET = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


class Report:
    """
    Output of one command: a query, a (j, value) table, named extra objects
    and metadata. Values are exact and serialized as strings.
    """

    def __init__(self, command, query, values=(), objects=None, meta=None, latex=None):
        self.command = command
        self.query = query
        self.values = list(values)
        self.objects = dict(objects or {})
        self.meta = dict(meta or {})
        self.latex_body = latex

    def to_json_obj(self):
        return {
            "command": self.command,
            "query": self.query,
            "values": [{"j": j, "value": str(v)} for j, v in self.values],
            "objects": {k: _jsonable(v) for k, v in self.objects.items()},
            "meta": self.meta,
        }


def _meta(method, seconds):
    return {"method": method, "timings": {"seconds": round(seconds, 6)}}


def _jsonable(v):
    if isinstance(v, DensePolynomial):
        return [str(c) for c in v]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return str(v)
    if isinstance(v, complex):
        return [repr(v.real), repr(v.imag)]
    return v


def dump_json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _plain_value(v):
    if isinstance(v, DensePolynomial):
        return v.pretty()
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_plain_value(x) for x in v) + ")"
    if isinstance(v, complex):
        return "%.12g%+.12gi" % (v.real, v.imag) if v.imag else "%.12g" % v.real
    return str(v)


def _latex_frac(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(x.numerator), x.denominator)


def latex_poly(p, var="t"):
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else "%s^{%d}" % (var, i))
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else ""
        else:
            coef = _latex_frac(c)
        parts.append(coef + mono)
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


def render(report, fmt):
    if fmt == "json":
        return dump_json(report.to_json_obj())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j", "value"])
        for j, v in report.values:
            w.writerow([j, str(v)])
        return buf.getvalue()
    if fmt == "latex":
        lines = []
        if report.latex_body:
            lines.append(report.latex_body)
        if report.values:
            lines.append(r"\begin{tabular}{c|c}")
            lines.append(r"$j$ & value \\ \hline")
            for j, v in report.values:
                lines.append(r"%d & %s \\" % (j, _latex_frac(v) if isinstance(v, (int, Fraction)) else v))
            lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    lines = ["%s %s" % (report.command, " ".join("%s=%s" % kv for kv in report.query.items()))]
    for name, v in report.objects.items():
        if name == "hilbert_polynomial":
            v = v.pretty("j")
        lines.append("%s: %s" % (name, _plain_value(v)))
    for j, v in report.values:
        lines.append("%4d  %s" % (j, v))
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

NARAYANA_METHODS = {
    "sulanke": narayana.sulanke_narayana,
    "determinant": narayana.sulanke_via_determinant,
    "euler": euler.narayana_via_euler,
}


def cmd_narayana(k, r, method="sulanke"):
    if k < 1 or r < 1:
        raise UsageError("need k >= 1 and r >= 1")
    if method == "euler" and (k < 2 or (k > 2 and r < 3)):
        raise UsageError("--method euler needs k >= 2 and (k = 2 or r >= 3)")
    fn = NARAYANA_METHODS[method]
    t0 = time.perf_counter()
    support = range(narayana.narayana_support(k, r) + 1)
    values = [(j, fn(k, r, j)) for j in support]
    elapsed = time.perf_counter() - t0
    reference = [(j, narayana.sulanke_narayana(k, r, j)) for j in support]
    diff = [(j, v, ref) for (j, v), (_, ref) in zip(values, reference) if v != ref]
    rep = Report("narayana", {"k": k, "r": r}, values,
                 meta=_meta(method, elapsed))
    return rep, diff


def cmd_hilbert(k, n, J=10):
    if not 1 <= k <= n:
        raise UsageError("need 1 <= k <= n")
    g = grassmann.GrassmannianId(k, n)
    t0 = time.perf_counter()
    series = grassmann.hilbert_series_coeffs(g, J)
    hp = grassmann.hilbert_polynomial(g)
    h = grassmann.h_polynomial(g)
    elapsed = time.perf_counter() - t0
    exp = g.dim + 1
    latex = r"H(\mathrm{Gr}(%d,%d)) = \frac{%s}{(1-t)^{%d}}" % (k, n, latex_poly(h), exp)
    return Report("hilbert", {"k": k, "n": n, "J": J}, list(enumerate(series.as_ints())),
                  objects={"hilbert_polynomial": hp, "h_polynomial": h,
                           "denominator_exponent": exp},
                  meta=_meta(None, elapsed), latex=latex)


def cmd_schubert(a, n=None):
    a = tuple(a)
    try:
        s = grassmann.SchubertIndex(a, n if n is not None else (a[-1] if a else 0))
    except ValueError as e:
        raise UsageError(str(e))
    t0 = time.perf_counter()
    d, D = grassmann.schubert_dimension(s)
    h = grassmann.schubert_h_vector(s)
    deg = grassmann.schubert_degree(s)
    hp = grassmann.schubert_hilbert_polynomial(s)
    elapsed = time.perf_counter() - t0
    latex = r"h_{X(%s)}(t) = %s" % (",".join(map(str, a)), latex_poly(DensePolynomial(h)))
    return Report("schubert", {"a": list(a), "n": s.n}, list(enumerate(h)),
                  objects={"dimension": d, "cone_dimension": D, "degree": deg,
                           "h_vector": h, "hilbert_polynomial": hp},
                  meta=_meta(None, elapsed), latex=latex)


def _product_formula_latex(k, r, q, roots):
    inp = q.input
    A = -(inp.c - inp.a - inp.m_total)
    ratio = q.poly.compose_linear(-1, 0) * (1 / q.poly(0))
    factors = ""
    for z in roots:
        if isinstance(z, Fraction):
            factors += r"\left(1+\frac{j}{%s}\right)" % _latex_frac(z)
        elif z.imag == 0:
            factors += r"\left(1+\frac{j}{%.10g}\right)" % z.real
        else:
            factors += r"\left(1+\frac{j}{%.10g%+.10gi}\right)" % (z.real, z.imag)
    lines = [
        r"% corrected constants: c-a-m = " + str(-A) + ", c-b-m = " + str(-A - 1),
        r"N_{%d}(%d,j) = \frac{1}{j+1}\binom{%s}{j}\binom{%s}{j}\,P(j)" % (k, r - 1, A, A + 1),
        r"P(j) = \frac{Q(-j)}{Q(0)} = %s" % latex_poly(ratio, "j"),
    ]
    if roots:
        lines.append(r"P(j) \approx " + factors)
    return "\n".join(lines)


def cmd_euler(k, r):
    try:
        inp = euler.narayana_input(k, r)
    except ValueError as e:
        raise UsageError(str(e))
    t0 = time.perf_counter()
    q = euler.q_polynomial(inp)
    roots = euler.numeric_roots(q)
    support = narayana.narayana_support(k, r - 1)
    values = [(j, euler.narayana_product_formula(k, r, j)) for j in range(support + 1)]
    elapsed = time.perf_counter() - t0
    residuals = [euler.root_residual(q, z) for z in roots]
    return Report("euler", {"k": k, "r": r, "target": "N_%d(%d, j)" % (k, r - 1)}, values,
                  objects={"Q": q.poly, "degree": q.degree, "m_total": inp.m_total,
                           "roots": roots, "max_root_residual": max(residuals, default=0.0)},
                  meta=_meta(None, elapsed),
                  latex=_product_formula_latex(k, r, q, roots))


def cmd_oracle(model, k=None, r=None, a=None, j=None, jobs=1):
    t0 = time.perf_counter()
    if model == "sulanke":
        if k is None or r is None:
            raise UsageError("oracle sulanke needs -k and -r")
        counts = paths.count_sulanke_paths((k, r), jobs=jobs)
        dp = paths.count_sulanke_paths_dp(k, r)
        total = sum(counts.values())
        rep = Report("oracle", {"model": model, "k": k, "r": r}, sorted(counts.items()),
                     objects={"total": total, "dp_total": sum(dp.values()),
                              "dfs_equals_dp": counts == dp})
    else:
        if a is None or j is None:
            raise UsageError("oracle narayana needs -a and -j")
        try:
            spec = paths.NarayanaPathSpec(tuple(a), j)
        except ValueError as e:
            raise UsageError(str(e))
        count = paths.count_narayana_paths(spec)
        rep = Report("oracle", {"model": model, "a": list(a), "j": j}, [(j, count)],
                     objects={"paths": count})
    rep.meta = _meta("dfs", time.perf_counter() - t0)
    return rep


def cmd_identities(kmax=4, rmax=6, jmax=8, seed=0):
    t0 = time.perf_counter()
    grid = identities.Grid(kmax, rmax, jmax, seed)
    results = []
    failed = False
    for ident, bad in identities.run_all(grid):
        results.append({"name": ident.name, "statement": ident.statement,
                        "status": "pass" if bad is None else "FAIL",
                        "counterexample": bad})
        failed |= bad is not None
    printed = []
    for ident, bad in identities.run_all(grid, identities.PRINTED_CLAIMS):
        printed.append({"name": ident.name, "statement": ident.statement,
                        "status": "discrepancy confirmed" if bad else "holds",
                        "counterexample": bad})
    rep = Report("identities", {"kmax": kmax, "rmax": rmax, "jmax": jmax, "seed": seed},
                 objects={"ledger": results, "printed_claims": printed},
                 meta=_meta("ledger", time.perf_counter() - t0))
    return rep, failed


def _render_identities(rep, fmt):
    if fmt != "plain":
        return render(rep, fmt)
    lines = ["identity ledger (%s)" % ", ".join("%s=%s" % kv for kv in rep.query.items())]
    for row in rep.objects["ledger"]:
        line = "  [%s] %s: %s" % (row["status"], row["name"], row["statement"])
        if row["counterexample"]:
            line += "\n        first counterexample: %s" % row["counterexample"]
        lines.append(line)
    lines.append("statements as printed (see ERRATA.md)")
    for row in rep.objects["printed_claims"]:
        lines.append("  [%s] %s: %s" % (row["status"], row["name"], row["statement"]))
        if row["counterexample"]:
            lines.append("        e.g. %s" % row["counterexample"])
    return "\n".join(lines) + "\n"


# -- argument parsing -----------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv", "latex"), default="plain")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = _Parser(prog="knarayana", description="exact k-Narayana and Grassmannian computations")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("narayana", parents=[common], help="k-Narayana numbers N_k(r, j)")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--method", choices=sorted(NARAYANA_METHODS), default="sulanke")

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert data of Gr(k, n)")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-J", type=int, default=10)

    s = sub.add_parser("schubert", parents=[common], help="Schubert variety X(a_1..a_k)")
    s.add_argument("a", type=int, nargs="+")
    s.add_argument("-n", type=int, default=None)

    s = sub.add_parser("euler", parents=[common], help="Euler transform data for the Narayana input (k, r)")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-r", type=int, required=True)

    s = sub.add_parser("oracle", parents=[common], help="brute-force path counts")
    s.add_argument("model", choices=("sulanke", "narayana"))
    s.add_argument("-k", type=int)
    s.add_argument("-r", type=int)
    s.add_argument("-a", type=int, nargs="+")
    s.add_argument("-j", type=int)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("identities", parents=[common], help="run the identity ledger")
    s.add_argument("--kmax", type=int, default=4)
    s.add_argument("--rmax", type=int, default=6)
    s.add_argument("--jmax", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    return p


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "narayana":
            rep, diff = cmd_narayana(args.k, args.r, args.method)
            if diff:
                for j, got, ref in diff:
                    sys.stderr.write("method %s disagrees at j=%d: %s vs sulanke %s\n"
                                     % (args.method, j, got, ref))
                status = EXIT_INCONSISTENT
            text = render(rep, args.format)
        elif args.command == "hilbert":
            text = render(cmd_hilbert(args.k, args.n, args.J), args.format)
        elif args.command == "schubert":
            text = render(cmd_schubert(args.a, args.n), args.format)
        elif args.command == "euler":
            text = render(cmd_euler(args.k, args.r), args.format)
        elif args.command == "oracle":
            text = render(cmd_oracle(args.model, args.k, args.r, args.a, args.j, args.jobs),
                          args.format)
        else:
            rep, failed = cmd_identities(args.kmax, args.rmax, args.jmax, args.seed)
            text = _render_identities(rep, args.format)
            if failed:
                status = EXIT_INCONSISTENT
    except UsageError as e:
        sys.stderr.write("knarayana: %s\n" % e)
        return EXIT_USAGE
    except paths.BudgetExceeded as e:
        sys.stderr.write("knarayana: %s (set %s to raise the limit)\n" % (e, paths.BUDGET_ENV))
        return EXIT_BUDGET
    except AssertionError as e:
        sys.stderr.write("knarayana: internal consistency violation: %s\n" % e)
        return EXIT_INCONSISTENT
    _emit(text, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
