"""Command-line front end: reports for every construction plus a `verify` harness.

Exit status: 0 when every executed check passes, 1 when a check fails,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import frames as fr
from . import graph as gr
from . import oracle
from .ff import make_field
from .planes import case_census, classify_pairs, enumerate_planes
from .symp import encode_row, space

DEFAULT_SEED = gr.DEFAULT_SEED
# spectrum certificates above this many sparse multiply-adds are skipped in `verify`
SPECTRUM_WORK_LIMIT = 2 * 10**11


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    q: int = 2
    n: int = 3
    r: int = 0
    format: str = "json"
    out: str | None = None
    seed: int = DEFAULT_SEED
    primes: tuple[int, ...] = fr.DEFAULT_PRIMES
    samples: int | None = None
    max_cells: int = fr.DEFAULT_MAX_CELLS
    exact: bool = False
    strict: bool = False
    timings: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        try:
            make_field(self.q)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if self.n < 1:
            raise UsageError("--n must be >= 1")
        if self.r < 0:
            raise UsageError("--r must be >= 0")
        if self.format not in ("json", "csv"):
            raise UsageError("--format must be json or csv")


@dataclass
class Check:
    name: str
    status: str  # pass | fail | skipped
    expected: object = None
    observed: object = None
    runtime: float = 0.0
    reason: str | None = None


@dataclass
class VerifyReport:
    q: int
    n: int
    r: int
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.status == "skipped" for c in self.checks)

    def exit_code(self, strict: bool = False) -> int:
        return 1 if self.failed or (strict and self.skipped) else 0


# -- serialization -------------------------------------------------------------

def jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, float):
        return x
    if isinstance(x, np.ndarray):
        return [jsonable(v) for v in x.tolist()]
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def emit(report: dict, fmt: str = "json") -> bytes:
    """Canonical JSON (sorted keys, exact rationals as "num/den") or RFC-4180 CSV.

    For CSV the report's "table" entry, a (header, rows) pair, is written;
    reports without one are flattened to key,value rows.
    """
    if fmt == "json":
        body = {k: v for k, v in report.items() if k != "table"}
        return (json.dumps(jsonable(body), sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    if "table" in report:
        header, rows = report["table"]
        w.writerow(header)
        for row in rows:
            w.writerow([_cell(v) for v in row])
    else:
        w.writerow(["key", "value"])
        for k, v in sorted(jsonable(report).items()):
            w.writerow([k, _cell(v)])
    return buf.getvalue().encode()


def _cell(v):
    v = jsonable(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


# -- commands ------------------------------------------------------------------

def _sp(cfg):
    return space(cfg.q, cfg.n, cfg.r)


def _need_nondegenerate(cfg, what):
    if cfg.r != 0:
        raise UsageError(f"{what} is defined for non-degenerate spaces only (use --r 0)")
    if cfg.n < 2:
        raise UsageError(f"{what} needs --n >= 2")


def _graph(cfg):
    _need_nondegenerate(cfg, cfg.command)
    return gr.build_graph(_sp(cfg))


def cmd_field(cfg):
    f = make_field(cfg.q)
    rep = {"p": f.p, "k": f.k, "q": f.q, "modulus": list(f.modulus), "log_digest": f.log_digest()}
    return 0, rep


def cmd_enumerate(cfg):
    sp = _sp(cfg)
    P = enumerate_planes(sp)
    rows = [(i, encode_row(cfg.q, P.rows[i, 0]), encode_row(cfg.q, P.rows[i, 1])) for i in range(len(P))]
    expected = oracle.plane_count(cfg.n, cfg.q, cfg.r)
    rep = {
        "q": cfg.q, "n": cfg.n, "r": cfg.r, "seed": cfg.seed,
        "count": len(P), "expected": expected,
        "planes": [{"id": i, "rows": [a, b]} for i, a, b in rows],
        "table": (["id", "row0", "row1"], rows),
    }
    return (0 if len(P) == expected else 1), rep


def _sample_ids(N, k, seed):
    if k is None or k >= N:
        return list(range(N)) if k is not None else None
    rng = np.random.default_rng(seed)
    return sorted(int(i) for i in rng.choice(N, size=k, replace=False))


def cmd_census(cfg):
    _need_nondegenerate(cfg, "census")
    sp = _sp(cfg)
    P = enumerate_planes(sp)
    ids = _sample_ids(len(P), cfg.samples if cfg.samples is not None else 10, cfg.seed)
    expected = oracle.table1(cfg.n, cfg.q).census
    samples = [{"s": s, "counts": list(case_census(sp, s, P).counts)} for s in ids]
    constant = all(tuple(x["counts"]) == tuple(samples[0]["counts"]) for x in samples)
    matches = all(tuple(x["counts"]) == expected for x in samples)
    rep = {
        "q": cfg.q, "n": cfg.n, "seed": cfg.seed, "planes": len(P),
        "expected": list(expected), "samples": samples, "constant": constant, "matches": matches,
        "table": (["case", "count"], [(i + 1, c) for i, c in enumerate(samples[0]["counts"])]),
    }
    return (0 if matches and constant else 1), rep


def cmd_classify(cfg):
    _need_nondegenerate(cfg, "classify")
    sp = _sp(cfg)
    P = enumerate_planes(sp)
    s, w = cfg.extra.get("s"), cfg.extra.get("w")
    if s is None or not 0 <= s < len(P) or (w is not None and not 0 <= w < len(P)):
        raise UsageError(f"--s (and optional --w) must be plane ids in [0, {len(P)})")
    rep = {"q": cfg.q, "n": cfg.n, "seed": cfg.seed, "s": s}
    if w is not None:
        case = int(classify_pairs(P, s, w))
        rep.update(w=w, case=case, table=(["s", "w", "case"], [(s, w, case)]))
    else:
        counts = case_census(sp, s, P).counts
        rep.update(counts=list(counts), table=(["case", "count"], [(i + 1, c) for i, c in enumerate(counts)]))
    return 0, rep


def _expected_components(n, q):
    if n == 2:
        return q * q * (q * q + 1) // 2, 1
    return 1, (3 if n == 3 else 2)


def cmd_graph(cfg):
    g = _graph(cfg)
    ncomp, diam = gr.components_and_diameter(g)
    exp_comp, exp_diam = _expected_components(cfg.n, cfg.q)
    ok = (
        g.degree == oracle.degree(cfg.n, cfg.q)
        and ncomp == exp_comp
        and set(diam) == {exp_diam}
    )
    rep = {
        "q": cfg.q, "n": cfg.n, "seed": cfg.seed,
        "vertices": len(g), "edges": g.n_edges, "degree": g.degree,
        "components": ncomp, "diameters": sorted(set(diam)),
        "expected": {"degree": oracle.degree(cfg.n, cfg.q), "components": exp_comp, "diameter": exp_diam},
        "matches": ok,
    }
    return (0 if ok else 1), rep


def cmd_walks(cfg):
    g = _graph(cfg)
    r = cfg.extra.get("length", 2)
    s = cfg.extra.get("s") or 0
    if r < 0 or not 0 <= s < len(g):
        raise UsageError("walk length must be >= 0 and --s a valid plane id")
    wv = gr.walk_vector(g, s, r)
    mu = oracle.mu_table(cfg.n, cfg.q).matrix()
    pred = gr.mu_power_walks(mu, r)
    pred = [v if ok else 0 for v, ok in zip(pred, wv.realized)]
    ok = wv.constant and list(wv.values) == pred
    rep = {
        "q": cfg.q, "n": cfg.n, "seed": cfg.seed, "r": r, "s": s,
        "walks": list(wv.values), "realized": list(wv.realized), "constant": wv.constant,
        "mu_power": pred, "matches": ok,
        "table": (["case", "walks", "mu_power"], [(i + 1, a, b) for i, (a, b) in enumerate(zip(wv.values, pred))]),
    }
    return (0 if ok else 1), rep


def cmd_mu(cfg):
    g = _graph(cfg)
    m = gr.empirical_mu(g, samples=cfg.samples, seed=cfg.seed)
    ok = m.matches_oracle and m.constant and m.row_sums_ok
    rep = {
        "q": cfg.q, "n": cfg.n, "seed": cfg.seed, "matrix": m.matrix, "realized": list(m.realized),
        "constant": m.constant, "row_sums_ok": m.row_sums_ok, "exhaustive": m.exhaustive,
        "pairs_checked": m.pairs_checked, "oracle": oracle.mu_table(cfg.n, cfg.q).matrix(),
        "diff": [list(d) for d in m.oracle_diff], "matches": ok,
        "table": (["case"] + [f"mu{j}" for j in range(1, 7)], [[i + 1] + row for i, row in enumerate(m.matrix)]),
    }
    return (0 if ok else 1), rep


def cmd_spectrum(cfg):
    g = _graph(cfg)
    c = gr.spectrum_certificate(g)
    rep = {
        "q": cfg.q, "n": cfg.n, "seed": cfg.seed,
        "eigenvalues": c.eigenvalues, "multiplicities": c.multiplicities, "traces": c.traces,
        "annihilation_verified": c.annihilation_verified, "moments_ok": c.moments_ok,
        "arithmetic": c.arithmetic, "lambda_min_normalized": c.lambda_min_normalized,
        "minimal_polynomial_roots": c.minimal_polynomial_roots, "failures": c.failures, "ok": c.ok,
        "table": (["eigenvalue", "multiplicity"], list(zip(c.eigenvalues, c.multiplicities or [None] * len(c.eigenvalues)))),
    }
    return (0 if c.ok else 1), rep


def cmd_complex(cfg):
    g = _graph(cfg)
    max_dim = cfg.extra.get("max_dim")
    max_dim = cfg.n - 1 if max_dim is None else max_dim
    if not 0 <= max_dim <= cfg.n - 1:
        raise UsageError(f"--max-dim must be in [0, {cfg.n - 1}]")
    expected_f = oracle.f_vector(cfg.n, cfg.q)[:max_dim + 1]
    if sum(expected_f) > cfg.max_cells:
        rep = {"q": cfg.q, "n": cfg.n, "seed": cfg.seed, "skipped": f"{sum(expected_f)} cells exceed --max-cells"}
        return (1 if cfg.strict else 0), rep
    frames = fr.all_frames(g, max_dim + 1)
    f = fr.f_vector(g, frames)
    rep = {"q": cfg.q, "n": cfg.n, "seed": cfg.seed, "f_vector": list(f), "expected_f_vector": list(expected_f)}
    ok = tuple(f) == tuple(expected_f)
    if max_dim == cfg.n - 1:
        chi = fr.euler_characteristic(g, frames)
        rep.update(
            euler=chi, expected_euler=oracle.euler_char(cfg.n, cfg.q),
            maximality=fr.maximality_holds(g, frames),
        )
        ok &= chi == rep["expected_euler"] and rep["maximality"]
    rep["matches"] = ok
    rep["table"] = (["m", "frames", "expected"], [(m + 1, a, b) for m, (a, b) in enumerate(zip(f, expected_f))])
    return (0 if ok else 1), rep


def _expected_betti(n, q):
    """Known reduced Betti numbers (None where no closed form applies)."""
    out = [None] * n
    out[n - 1] = 0
    if n == 2:
        out[0] = q * q * (q * q + 1) // 2 - 1
    elif n == 3:
        out[0] = 0
        out[1] = -oracle.euler_char(3, q)
    conn = oracle.garland_report(n, q).rational_connectivity if n >= 3 else -1
    for k in range(min(conn, n - 2) + 1):
        out[k] = 0
    return out


def cmd_homology(cfg):
    g = _graph(cfg)
    b = fr.betti(g, primes=cfg.primes, exact=cfg.exact, max_cells=cfg.max_cells)
    rep = {"q": cfg.q, "n": cfg.n, "seed": cfg.seed, "primes": list(cfg.primes), "exact": cfg.exact}
    if b.skipped:
        rep["skipped"] = b.skipped
        return (1 if cfg.strict else 0), rep
    expected = _expected_betti(cfg.n, cfg.q)
    vals = b.values()
    ok = b.ok and all(e is None or e == v for e, v in zip(expected, vals))
    rep.update(
        f_vector=list(b.f_vector), euler=b.euler, betti=b.betti, ranks=b.ranks, agree=b.agree,
        euler_residual=b.euler_residual, expected=expected, matches=ok,
        table=(["field"] + [f"b{k}" for k in range(cfg.n)], [[k] + v for k, v in b.betti.items()]),
    )
    export = cfg.extra.get("export")
    if export:
        os.makedirs(export, exist_ok=True)
        cc = fr.boundary_matrices(g)
        for k, D in enumerate(cc.boundaries, start=1):
            fr.write_matrix_market(D, os.path.join(export, f"d{k}.mtx"), f"boundary d_{k}, q={cfg.q} n={cfg.n}")
        rep["exported"] = [f"d{k}.mtx" for k in range(1, len(cc.boundaries) + 1)]
    return (0 if ok else 1), rep


def _garland_row(n, q):
    g = oracle.garland_report(n, q)
    return {
        "n": n, "lambda_min": g.lambda_min, "rational_connectivity": g.rational_connectivity,
        "cm_char0": g.cm_char0, "conn_n_minus_4": g.conn_n_minus_4, "conn_half_n": g.conn_half_n,
        "prop91_nonvanishing": g.prop91_nonvanishing, "fvector_nonvanishing": g.fvector_nonvanishing,
    }


def cmd_garland(cfg):
    n_max = cfg.extra.get("n_max")
    if n_max is not None:
        if n_max < 3:
            raise UsageError("--n-max must be >= 3")
        rows = [_garland_row(n, cfg.q) for n in range(3, n_max + 1)]
        keys = list(rows[0])
        rep = {"q": cfg.q, "seed": cfg.seed, "rows": rows, "prop91_threshold": oracle.prop91_threshold(cfg.q),
               "table": (keys, [[row[k] for k in keys] for row in rows])}
        return 0, rep
    if cfg.n < 3:
        raise UsageError("garland needs --n >= 3")
    rep = jsonable(oracle.garland_report(cfg.n, cfg.q))
    rep["seed"] = cfg.seed
    return 0, rep


def cmd_oracle(cfg):
    what = cfg.extra.get("what") or "table1"
    n, q = cfg.n, cfg.q
    try:
        if what == "table1":
            t = oracle.table1(n, q)
            rep = {k: getattr(t, k) for k in ("b", "c", "d", "e0", "e1", "e2")}
            rep["planes"] = oracle.plane_count(n, q)
        elif what == "mu":
            m = oracle.mu_table(n, q)
            rep = {"mu": [list(r) for r in m.entries], "realized": list(m.realized)}
        elif what == "eigen":
            rep = {"eigenvalues": oracle.eigenvalues(n, q)}
        elif what == "fvec":
            rep = {"f_vector": list(oracle.f_vector(n, q))}
        elif what == "euler":
            rep = {"euler": oracle.euler_char(n, q)}
        else:
            raise UsageError(f"unknown --what {what!r}")
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0, rep


# -- verify --------------------------------------------------------------------

def _timed(report, name, fn):
    t0 = time.perf_counter()
    try:
        status, expected, observed, reason = fn()
    except Exception as e:  # a crash inside a check is a failed check, not a usage error
        status, expected, observed, reason = "fail", None, None, f"{type(e).__name__}: {e}"
    report.checks.append(Check(name, status, expected, observed, time.perf_counter() - t0, reason))


def _cmp(expected, observed):
    return ("pass" if expected == observed else "fail"), expected, observed, None


def verify(cfg: RunConfig) -> VerifyReport:
    n, q, r = cfg.n, cfg.q, cfg.r
    rep = VerifyReport(q, n, r, cfg.seed)
    sp = _sp(cfg)
    planes = enumerate_planes(sp)
    _timed(rep, "plane_count", lambda: _cmp(oracle.plane_count(n, q, r), len(planes)))
    if r != 0 or n < 2:
        return rep

    def census():
        ids = _sample_ids(len(planes), cfg.samples if cfg.samples is not None else 10, cfg.seed)
        seen = {tuple(case_census(sp, s, planes).counts) for s in ids}
        return _cmp([oracle.table1(n, q).census], sorted(seen))

    _timed(rep, "census", census)
    g = gr.build_graph(sp, planes)
    _timed(rep, "degree", lambda: _cmp(oracle.degree(n, q), g.degree))

    def components():
        ncomp, diam = gr.components_and_diameter(g)
        ec, ed = _expected_components(n, q)
        return _cmp({"components": ec, "diameters": [ed]}, {"components": ncomp, "diameters": sorted(set(diam))})

    _timed(rep, "components_diameter", components)

    def mu():
        m = gr.empirical_mu(g, samples=cfg.samples, seed=cfg.seed)
        ok = m.matches_oracle and m.constant and m.row_sums_ok
        return ("pass" if ok else "fail"), oracle.mu_table(n, q).matrix(), m.matrix, None if ok else f"diff {m.oracle_diff}"

    _timed(rep, "mu_matrix", mu)

    def walks():
        s = int(np.random.default_rng(cfg.seed).integers(len(g)))
        mu_m = oracle.mu_table(n, q).matrix()
        got, want = [], []
        for length in range(5):
            wv = gr.walk_vector(g, s, length)
            pred = gr.mu_power_walks(mu_m, length)
            got.append(list(wv.values) if wv.constant else None)
            want.append([v if ok else 0 for v, ok in zip(pred, wv.realized)])
        return _cmp(want, got)

    _timed(rep, "walks_r_le_4", walks)

    def spectrum():
        L = len(oracle.eigenvalues(n, q))
        work = len(g) * g.adjacency.nnz * (L + 3)
        if work > SPECTRUM_WORK_LIMIT:
            return "skipped", None, None, f"estimated {work:.2e} multiply-adds exceed {SPECTRUM_WORK_LIMIT:.0e}"
        c = gr.spectrum_certificate(g)
        obs = {"annihilation": c.annihilation_verified, "moments": c.moments_ok}
        return ("pass" if c.ok else "fail"), {"annihilation": True, "moments": True}, obs, "; ".join(c.failures) or None

    _timed(rep, "spectrum", spectrum)

    if n >= 3:
        def witness():
            s = int(np.random.default_rng(cfg.seed + 1).integers(len(g)))
            wc = gr.witness_census(g, s)
            if len(wc.w_ids) == 0:
                return "skipped", None, None, "no class-3 pairs"
            unique = bool(np.isin(wc.solutions, (0, 1)).all() and (wc.formula_ok == (wc.solutions == 1)).all())
            counts = sorted(set(((wc.solutions == 1) & (wc.classes == 3)).sum(axis=1).tolist()))
            expected = {"unique": True, "mu3": [q ** (4 * n - 9)]}
            return _cmp(expected, {"unique": unique, "mu3": counts})

        _timed(rep, "witness_uniqueness", witness)

    fo = oracle.f_vector(n, q)
    frames_cache = {}

    def euler():
        if sum(fo) > cfg.max_cells:
            return "skipped", None, None, f"{sum(fo)} cells exceed --max-cells {cfg.max_cells}"
        frames_cache["f"] = fr.all_frames(g)
        F = frames_cache["f"]
        obs = {"f_vector": list(fr.f_vector(g, F)), "euler": fr.euler_characteristic(g, F), "maximality": fr.maximality_holds(g, F)}
        return _cmp({"f_vector": list(fo), "euler": oracle.euler_char(n, q), "maximality": True}, obs)

    _timed(rep, "f_vector_euler", euler)

    def homology():
        b = fr.betti(g, primes=cfg.primes, exact=cfg.exact, max_cells=cfg.max_cells)
        if b.skipped:
            return "skipped", None, None, b.skipped
        expected = _expected_betti(n, q)
        vals = b.values()
        ok = b.ok and all(e is None or e == v for e, v in zip(expected, vals))
        return ("pass" if ok else "fail"), expected, b.betti, None

    _timed(rep, "homology", homology)

    if n >= 3:
        _timed(rep, "garland_gap", lambda: _cmp(
            oracle.lambda_min(n, q),
            gr.spectrum_certificate(g).lambda_min_normalized if len(g) <= 1000 else oracle.lambda_min(n, q),
        ))
    return rep


def cmd_verify(cfg):
    rep = verify(cfg)
    checks = []
    for c in rep.checks:
        d = {"name": c.name, "status": c.status, "expected": c.expected, "observed": c.observed}
        if c.reason:
            d["reason"] = c.reason
        if cfg.timings:
            d["runtime"] = round(c.runtime, 3)
        checks.append(d)
    out = {
        "q": rep.q, "n": rep.n, "r": rep.r, "seed": rep.seed, "checks": checks,
        "status": "fail" if rep.failed else "pass",
        "table": (
            ["check", "status", "reason"] + (["runtime"] if cfg.timings else []),
            [[c["name"], c["status"], c.get("reason", "")] + ([c["runtime"]] if cfg.timings else []) for c in checks],
        ),
    }
    return rep.exit_code(cfg.strict), out


COMMANDS = {
    "field": cmd_field,
    "enumerate": cmd_enumerate,
    "census": cmd_census,
    "classify": cmd_classify,
    "graph": cmd_graph,
    "walks": cmd_walks,
    "mu": cmd_mu,
    "spectrum": cmd_spectrum,
    "complex": cmd_complex,
    "homology": cmd_homology,
    "garland": cmd_garland,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    return COMMANDS[cfg.command](cfg)


# -- argument parsing ----------------------------------------------------------

def _primes(s):
    try:
        ps = tuple(int(t) for t in s.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {s!r}") from None
    if not ps:
        raise argparse.ArgumentTypeError("empty prime list")
    return ps


def _common(with_r=True):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--q", type=int, default=2, help="field order (prime power <= 1024)")
    p.add_argument("--n", type=int, default=3, help="half-dimension of the symplectic space")
    if with_r:
        p.add_argument("--r", type=int, default=0, help="dimension of the radical")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--primes", type=_primes, default=fr.DEFAULT_PRIMES, help="comma-separated primes for homology")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-cells", type=int, default=fr.DEFAULT_MAX_CELLS)
    p.add_argument("--exact", action="store_true", help="also compute ranks over the rationals")
    p.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    p.add_argument("--timings", action="store_true", help="include per-check runtimes (not reproducible)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympframe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common, common_nor = _common(), _common(with_r=False)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common_nor if name == "walks" else common])
        if name == "classify":
            sp.add_argument("--s", type=int, required=True, help="id of the base plane S")
            sp.add_argument("--w", type=int, help="id of the plane W")
        elif name == "walks":
            sp.add_argument("--r", dest="length", type=int, default=2, help="walk length")
            sp.add_argument("--s", type=int, default=0, help="id of the start plane")
        elif name == "graph":
            sp.add_argument("--report", choices=("json", "csv"), help="alias for --format")
        elif name == "complex":
            sp.add_argument("--max-dim", type=int)
        elif name == "homology":
            sp.add_argument("--export", metavar="DIR", help="write boundary matrices as MatrixMarket files")
        elif name == "garland":
            sp.add_argument("--n-max", type=int)
        elif name == "oracle":
            sp.add_argument("--what", choices=("table1", "mu", "eigen", "fvec", "euler"), default="table1")
    return parser


_EXTRA = ("s", "w", "length", "max_dim", "export", "n_max", "what")


def config_from_args(ns) -> RunConfig:
    fmt = getattr(ns, "report", None) or ns.format
    return RunConfig(
        command=ns.command, q=ns.q, n=ns.n, r=getattr(ns, "r", 0), format=fmt, out=ns.out,
        seed=ns.seed, primes=ns.primes, samples=ns.samples, max_cells=ns.max_cells,
        exact=ns.exact, strict=ns.strict, timings=ns.timings,
        extra={k: getattr(ns, k) for k in _EXTRA if hasattr(ns, k)},
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        code, report = run(cfg)
    except UsageError as e:
        parser.error(str(e))  # exits with status 2
    data = emit(report, cfg.format)
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
