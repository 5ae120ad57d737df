"""Command-line interface: ``thetalift <command> [subcommand] [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
The expansion cache lives in $THETALIFT_CACHE_DIR (default ~/.cache/thetalift).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import mpmath

from . import __version__

CACHE_ENV = "THETALIFT_CACHE_DIR"
CACHE_VERSION = f"thetalift-{__version__}-cache-1"


class UsageError(Exception):
    """Bad flag value; ``flag`` names the offending option."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass
class JobConfig:
    command: tuple[str, ...]
    lattice: str | None = None
    lattice_file: str | None = None
    precision_bits: int = 128
    order: int | None = None
    output_format: str = "text"
    cache_dir: Path | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.precision_bits <= 0:
            raise UsageError("--precision", "must be positive")
        if self.order is not None and self.order <= 0:
            raise UsageError("--order", "must be positive")
        if self.output_format not in ("text", "csv"):
            raise UsageError("--format", "must be text or csv")


@dataclass
class Report:
    meta: list[tuple[str, str]] = field(default_factory=list)
    header: list[str] | None = None
    rows: list[list[str]] = field(default_factory=list)
    failed: bool = False

    def add(self, key, value):
        self.meta.append((key, str(value)))

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["key", "value"])
            w.writerows(self.meta)
            if self.header:
                buf.write("\n")
                w.writerow(self.header)
                w.writerows(self.rows)
            return buf.getvalue()
        lines = [f"{k}: {v}" for k, v in self.meta]
        if self.header:
            widths = [max(len(str(r[i])) for r in [self.header] + self.rows) for i in range(len(self.header))]
            lines.append("  ".join(h.ljust(w) for h, w in zip(self.header, widths)).rstrip())
            for r in self.rows:
                lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"


# -- cache --------------------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "thetalift"


def cache_key(description: dict) -> str:
    blob = json.dumps({"version": CACHE_VERSION, **description}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cached_table(cfg: JobConfig, description: dict, compute):
    """Rows of strings from the cache, or computed and stored. Returns (rows, hit)."""
    if cfg.cache_dir is None:
        return compute(), False
    key = cache_key(description)
    path = cfg.cache_dir / f"{key}.json"
    if path.exists():
        try:
            entry = json.loads(path.read_text())
            if entry.get("version") == CACHE_VERSION and entry.get("description") == description:
                return [list(r) for r in entry["rows"]], True
        except (OSError, ValueError, KeyError):
            pass
    rows = compute()
    cfg.cache_dir.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"version": CACHE_VERSION, "description": description, "rows": rows}))
    tmp.replace(path)
    return rows, False


# -- helpers --------------------------------------------------------------------------


def _lattice(cfg: JobConfig):
    from .lattice import load_lattice_file, named_lattice

    if cfg.lattice_file:
        try:
            return load_lattice_file(cfg.lattice_file)
        except (OSError, ValueError) as exc:
            raise UsageError("--lattice-file", str(exc)) from exc
    if not cfg.lattice:
        raise UsageError("--lattice", "a lattice is required (--lattice or --lattice-file)")
    try:
        return named_lattice(cfg.lattice)
    except (ValueError, KeyError) as exc:
        raise UsageError("--lattice", str(exc)) from exc


def _lattice_description(cfg: JobConfig, L) -> dict:
    return {"gram": [[int(x) for x in r] for r in L.gram]}


def _num(x, bits: int) -> str:
    return mpmath.nstr(x, max(5, int(bits * 0.30103) - 2))


def _bound(x) -> str:
    return mpmath.nstr(x, 3)


def _cnum(z, bits: int) -> str:
    z = mpmath.mpc(z)
    return f"{_num(z.real, bits)}{'+' if z.imag >= 0 else '-'}{_num(abs(z.imag), bits)}j"


def _parse_vectors(text: str, flag: str) -> list[list[Fraction]]:
    try:
        return [[Fraction(x) for x in v.split(",")] for v in text.split(";") if v.strip()]
    except ValueError as exc:
        raise UsageError(flag, f"cannot parse vectors {text!r}") from exc


def _parse_complex(text: str, flag: str):
    try:
        return mpmath.mpc(complex(text.replace(" ", "")))
    except ValueError as exc:
        raise UsageError(flag, f"cannot parse complex number {text!r}") from exc


# -- commands --------------------------------------------------------------------------


def cmd_lattice_info(cfg: JobConfig) -> Report:
    from .lattice import witt_index_bounded

    L = _lattice(cfg)
    A = L.discriminant_form
    r = Report()
    r.add("name", L.name)
    r.add("rank", L.rank)
    p, q = L.signature
    r.add("signature", f"({p},{q})")
    r.add("det", L.det)
    r.add("discriminant_group", " x ".join(f"Z/{d}" for d in A.divisors) or "trivial")
    r.add("order", A.order)
    r.add("level", A.level)
    r.add("signature_mod_8", A.signature_mod_8)
    w = witt_index_bounded(L)
    r.add("witt_index", "undetermined" if w is None else w)
    r.header = ["label", "representative", "q"]
    for h in A.labels:
        rep = ",".join(str(x) for x in A.representative(h))
        r.rows.append([",".join(map(str, h)) or "()", rep, str(A.q(h))])
    return r


def cmd_weilrep_matrix(cfg: JobConfig) -> Report:
    from .weilrep import rho, rho_S, rho_T

    L = _lattice(cfg)
    A = L.discriminant_form
    gen = cfg.params["generator"]
    if gen == "S":
        M = rho_S(A)
    elif gen == "T":
        M = rho_T(A)
    else:
        try:
            a, b, c, d = (int(x) for x in gen.split(","))
        except ValueError as exc:
            raise UsageError("--generator", "expected S, T or a,b,c,d") from exc
        try:
            M = rho(A, [[a, b], [c, d]])
        except ValueError as exc:
            raise UsageError("--generator", str(exc)) from exc
    r = Report()
    r.add("lattice", L.name)
    r.add("generator", gen)
    r.add("labels", " ".join(",".join(map(str, h)) for h in A.labels))
    for line in M.render().splitlines():
        k, _, v = line.partition(": ")
        r.add(k, v)
    return r


def cmd_theta_expand(cfg: JobConfig) -> Report:
    from .thetaseries import theta_definite

    L = _lattice(cfg)
    if not L.is_positive_definite():
        raise UsageError("--lattice", "theta expand needs a positive definite lattice")
    order = cfg.order or 10

    def compute():
        th = theta_definite(L, order)
        return [[",".join(map(str, h)) or "()", str(n), str(c)] for h, n, c in th.rows()]

    rows, hit = cached_table(cfg, {"kind": "theta", "lattice": _lattice_description(cfg, L), "order": order}, compute)
    r = Report()
    r.add("lattice", L.name)
    r.add("weight", Fraction(L.rank, 2))
    r.add("order", order)
    r.add("provenance", "exact")
    r.header = ["label", "n", "coefficient"]
    r.rows = rows
    return r


def cmd_theta_modularity(cfg: JobConfig) -> Report:
    from .lattice import NegativePlane
    from .thetaseries import check_modularity

    L = _lattice(cfg)
    try:
        z = NegativePlane(L, _parse_vectors(cfg.params["plane"], "--plane"))
    except ValueError as exc:
        raise UsageError("--plane", str(exc)) from exc
    taus = [_parse_complex(t, "--tau") for t in cfg.params["tau"]]
    tol = mpmath.mpf(cfg.params["tolerance"])
    r = Report()
    r.add("lattice", L.name)
    r.add("gamma", cfg.params["gamma"])
    r.add("precision_bits", cfg.precision_bits)
    r.header = ["tau", "residual", "error_bound", "status"]
    for tau in taus:
        try:
            res = check_modularity(L, z, cfg.params["gamma"], tau, cfg.precision_bits)
        except ValueError as exc:
            raise UsageError("--lattice", str(exc)) from exc
        ok = res.value + res.error < tol
        r.failed |= not ok
        r.rows.append([_cnum(tau, 40), _bound(res.value), _bound(res.error), "pass" if ok else "FAIL"])
    return r


def cmd_modforms_eigenforms(cfg: JobConfig) -> Report:
    from .modforms import dim_cusp_forms, eigenforms

    k = cfg.params["weight"]
    if k <= 0 or k % 2:
        raise UsageError("--weight", "must be a positive even integer")
    order = cfg.order or 12

    def compute():
        rows = []
        for i, f in enumerate(eigenforms(k, max(order, 2 * dim_cusp_forms(k) + 3))):
            for n in range(1, order):
                rows.append([str(i), f.field.poly_str(), str(n), str(f.c(n))])
        return rows

    rows, _ = cached_table(cfg, {"kind": "eigenforms", "weight": k, "order": order}, compute)
    r = Report()
    r.add("weight", k)
    r.add("dim_S", dim_cusp_forms(k))
    r.add("order", order)
    r.add("provenance", "exact (coefficients in Q[x]/(field), x the generator)")
    r.header = ["form", "field", "n", "c(n)"]
    r.rows = rows
    return r


def _eigenform(k: int, index: int, order: int):
    from .modforms import dim_cusp_forms, eigenforms

    forms = eigenforms(k, max(order, 2 * dim_cusp_forms(k) + 3))
    if not forms:
        raise UsageError("--weight", f"S_{k} is zero")
    if not 0 <= index < len(forms):
        raise UsageError("--form", f"choose an index below {len(forms)}")
    return forms[index]


def cmd_lvalue(cfg: JobConfig) -> Report:
    from .lfunctions import standard_L_euler, standard_L_rankin

    k = cfg.params["weight"]
    s = Fraction(cfg.params["s"])
    P = cfg.params["prime_bound"]
    nmax = cfg.params["nmax"]
    route = cfg.params["route"]
    need = max(P + 1, nmax * nmax + 1 if route in ("rankin-square", "all") else nmax + 1)
    f = _eigenform(k, cfg.params["form"], need)
    r = Report()
    r.add("weight", k)
    r.add("s", s)
    r.add("field", f.field.poly_str())
    r.header = ["route", "value", "bound", "provenance"]
    results = []
    try:
        if route in ("euler", "all"):
            results.append(standard_L_euler(f, s, P, cfg.precision_bits, cfg.params["embedding"]))
        if route in ("rankin-square", "all"):
            results.append(standard_L_rankin(f, s, nmax, "c(n^2)", cfg.precision_bits, cfg.params["embedding"]))
        if route in ("rankin-product", "all"):
            results.append(standard_L_rankin(f, s, nmax, "c(n)^2", cfg.precision_bits, cfg.params["embedding"]))
    except ValueError as exc:
        raise UsageError("--s", str(exc)) from exc
    for v in results:
        r.rows.append([v.method, _num(v.value, cfg.precision_bits), _bound(v.bound), "bounded-numeric"])
    if len(results) > 1:
        worst = max(
            abs(a.value - b.value) - a.bound - b.bound for i, a in enumerate(results) for b in results[i + 1:]
        )
        agree = worst <= 0
        r.add("routes_agree", str(agree).lower())
        r.failed |= not agree
    return r


def cmd_normratio(cfg: JobConfig) -> Report:
    from .lfunctions import norm_ratio_report

    p, q, ell = cfg.params["p"], cfg.params["q"], cfg.params["ell"]
    k = cfg.params["weight"]
    kappa = (p + q) // 2 + ell
    if k is not None and k != kappa:
        raise UsageError("--weight", f"must equal (p+q)/2 + ell = {kappa}")
    P = cfg.params["prime_bound"]
    f = None
    if not (p == 1 and q + ell > 1):
        f = _eigenform(kappa, cfg.params["form"], P + 1)
    try:
        rep = norm_ratio_report(p, q, ell, f, cfg.params["witt"], cfg.precision_bits, P, cfg.params["embedding"])
    except ValueError as exc:
        raise UsageError("--p/--q/--ell", str(exc)) from exc
    r = Report()
    for key, val in rep.render():
        r.add(key, val)
    return r


def cmd_borcherds_product(cfg: JobConfig) -> Report:
    from .borcherds import borcherds_divisor, borcherds_product_expansion, borcherds_weight, named_form, split_UU

    if cfg.lattice not in ("UU", "U+U", "U⊕U"):
        raise UsageError("--lattice", "product expansions are available for UU")
    order = cfg.order or 6
    try:
        # exponents c(Q(lambda)) are needed up to Q(lambda) ~ (degree/2)^2
        f = named_form(cfg.params["input"], (order + 2) ** 2 // 4 + 2)
    except ValueError as exc:
        raise UsageError("--input", str(exc)) from exc
    rho = tuple(Fraction(x) for x in cfg.params["weyl"].split(","))
    split = split_UU()

    def compute():
        datum = borcherds_product_expansion(split, f, rho, order)
        return [[str(a), str(b), str(c)] for (a, b), c in sorted(datum.expansion.coeffs.items())]

    rows, _ = cached_table(
        cfg, {"kind": "borcherds", "input": cfg.params["input"], "weyl": [str(x) for x in rho], "order": order}, compute
    )
    r = Report()
    r.add("lattice", "UU")
    r.add("input", cfg.params["input"])
    r.add("weight", borcherds_weight(f))
    r.add("divisor", "; ".join(f"{h or '()'} n={n} mult={c}" for h, n, c in borcherds_divisor(f)) or "empty")
    r.add("weyl_vector", ",".join(str(x) for x in rho))
    r.add("order", order)
    r.add("provenance", "exact")
    r.header = ["a", "b", "coefficient of q1^a q2^b"]
    r.rows = rows
    return r


def cmd_verify_fock(cfg: JobConfig) -> Report:
    from .fock import EXTRA_CHECKS, LEMMAS, verify_lemma

    name = cfg.params["lemma"]
    names = LEMMAS if name == "all" else (name,)
    if name != "all" and name not in LEMMAS + EXTRA_CHECKS:
        raise UsageError("--lemma", f"unknown lemma {name!r}")
    def axis(key, default):
        return (cfg.params[key],) if cfg.params[key] is not None else default

    grid = [(p, q, ell) for p in axis("p", (1, 2, 3)) for q in axis("q", (0, 1, 2)) for ell in axis("ell", (0, 1, 2, 3))]
    r = Report()
    r.header = ["lemma", "p", "q", "ell", "status", "witness"]
    for n in names:
        for p, q, ell in grid:
            try:
                res = verify_lemma(n, p, q, ell)
            except ValueError as exc:
                raise UsageError("--p/--q/--ell", str(exc)) from exc
            r.failed |= not res.passed
            r.rows.append([n, str(p), str(q), str(ell), "pass" if res.passed else "FAIL", res.witness or "-"])
    r.add("checks", len(r.rows))
    r.add("failures", sum(1 for row in r.rows if row[4] == "FAIL"))
    return r


def cmd_verify_weilrep(cfg: JobConfig) -> Report:
    from .weilrep import milgram_check, verify_relations

    L = _lattice(cfg)
    A = L.discriminant_form
    rel = verify_relations(A)
    rel["Milgram"] = milgram_check(A)
    r = Report()
    r.add("lattice", L.name)
    r.add("discriminant_order", A.order)
    r.add("level", A.level)
    r.header = ["relation", "status"]
    for k, ok in rel.items():
        r.rows.append([k, "pass" if ok else "FAIL"])
        r.failed |= not ok
    return r


COMMANDS = {
    ("lattice", "info"): cmd_lattice_info,
    ("weilrep", "matrix"): cmd_weilrep_matrix,
    ("theta", "expand"): cmd_theta_expand,
    ("theta", "check-modularity"): cmd_theta_modularity,
    ("modforms", "eigenforms"): cmd_modforms_eigenforms,
    ("lvalue",): cmd_lvalue,
    ("normratio",): cmd_normratio,
    ("borcherds", "product"): cmd_borcherds_product,
    ("verify", "fock"): cmd_verify_fock,
    ("verify", "weilrep"): cmd_verify_weilrep,
}


# -- argument parsing ------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common(p: argparse.ArgumentParser, lattice: bool = False, order: bool = False):
    p.add_argument("--format", dest="output_format", choices=("text", "csv"), default="text")
    p.add_argument("--precision", dest="precision_bits", type=_positive_int, default=128, help="binary digits")
    p.add_argument("--cache-dir", default=None, help=f"expansion cache (default ${CACHE_ENV} or ~/.cache/thetalift)")
    p.add_argument("--no-cache", action="store_true")
    if lattice:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--lattice", help="named lattice, e.g. A2, E8, UU, A2+U, diag(2,-2)")
        g.add_argument("--lattice-file", help="JSON file with fields name and gram")
    if order:
        p.add_argument("--order", type=_positive_int, default=None, help="truncation order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetalift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="cmd", required=True)

    lat = top.add_parser("lattice").add_subparsers(dest="sub", required=True)
    _common(lat.add_parser("info"), lattice=True)

    w = top.add_parser("weilrep").add_subparsers(dest="sub", required=True)
    m = w.add_parser("matrix")
    _common(m, lattice=True)
    m.add_argument("--generator", default="S", help="S, T or a,b,c,d for an element of SL2(Z)")

    th = top.add_parser("theta").add_subparsers(dest="sub", required=True)
    _common(th.add_parser("expand"), lattice=True, order=True)
    cm = th.add_parser("check-modularity")
    _common(cm, lattice=True)
    cm.add_argument("--plane", required=True, help="negative vectors 'x1,x2;y1,y2'")
    cm.add_argument("--gamma", choices=("S", "T"), default="S")
    cm.add_argument("--tau", action="append", required=True, help="repeatable, e.g. 0.1+1.1j")
    cm.add_argument("--tolerance", default="1e-10")

    mf = top.add_parser("modforms").add_subparsers(dest="sub", required=True)
    ef = mf.add_parser("eigenforms")
    _common(ef, order=True)
    ef.add_argument("--weight", type=int, required=True)

    lv = top.add_parser("lvalue")
    _common(lv)
    lv.add_argument("--weight", type=int, required=True)
    lv.add_argument("--s", required=True, help="rational point s > 1")
    lv.add_argument("--route", choices=("euler", "rankin-square", "rankin-product", "all"), default="all")
    lv.add_argument("--prime-bound", type=_positive_int, default=10 ** 4)
    lv.add_argument("--nmax", type=_positive_int, default=300)
    lv.add_argument("--form", type=int, default=0, help="eigenform index")
    lv.add_argument("--embedding", type=int, default=0, help="real embedding index")

    nr = top.add_parser("normratio")
    _common(nr)
    nr.add_argument("--p", type=int, required=True)
    nr.add_argument("--q", type=int, required=True)
    nr.add_argument("--ell", type=int, required=True)
    nr.add_argument("--weight", type=int, default=None)
    nr.add_argument("--witt", type=int, default=None, help="Witt index if known")
    nr.add_argument("--prime-bound", type=_positive_int, default=10 ** 4)
    nr.add_argument("--form", type=int, default=0)
    nr.add_argument("--embedding", type=int, default=0)

    bo = top.add_parser("borcherds").add_subparsers(dest="sub", required=True)
    bp = bo.add_parser("product")
    _common(bp, order=True)
    bp.add_argument("--lattice", default="UU")
    bp.add_argument("--input", required=True, help="J, E4^2/Delta, 0 or an integer multiple such as 2J")
    bp.add_argument("--weyl", default="-1,0", help="Weyl vector in K = U")

    ve = top.add_parser("verify").add_subparsers(dest="sub", required=True)
    vf = ve.add_parser("fock")
    _common(vf)
    vf.add_argument("--lemma", default="all")
    vf.add_argument("--p", type=int, default=None)
    vf.add_argument("--q", type=int, default=None)
    vf.add_argument("--ell", type=int, default=None)
    _common(ve.add_parser("weilrep"), lattice=True)
    return parser


_GLOBAL = {"cmd", "sub", "output_format", "precision_bits", "cache_dir", "no_cache", "lattice", "lattice_file", "order"}


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    command = (ns.cmd,) if getattr(ns, "sub", None) is None else (ns.cmd, ns.sub)
    if ns.no_cache:
        cache = None
    else:
        cache = Path(ns.cache_dir) if ns.cache_dir else default_cache_dir()
    return JobConfig(
        command=command,
        lattice=getattr(ns, "lattice", None),
        lattice_file=getattr(ns, "lattice_file", None),
        precision_bits=ns.precision_bits,
        order=getattr(ns, "order", None),
        output_format=ns.output_format,
        cache_dir=cache,
        params={k: v for k, v in vars(ns).items() if k not in _GLOBAL},
    )


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        report = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"thetalift: error: {exc}", file=stderr)
        return 2
    stdout.write(report.render(cfg.output_format))
    return 1 if report.failed else 0


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
