"""Staged uniqueness proof with a machine-readable certificate."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import platform
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__, designs, graphs, kernels, reference, scheme, sphere
from .designs import VerificationError
from .ratmath import RatMatrix, mat_mul, rat_str

log = logging.getLogger(__name__)

SCHEMA = "witt-uniq-certificate/1"
CACHE_ENV = "WITT_UNIQ_CACHE"

STAGES = (
    (1, "design"),
    (2, "scheme"),
    (3, "eigenmatrices"),
    (4, "srg_t12"),
    (5, "lemma2"),
    (6, "lemma3"),
    (7, "final"),
)

AXIOMS = {
    "delsarte_design_scheme": "Delsarte: a 4-design yields an association scheme on its blocks "
                              "(not relied on: the axioms are checked directly)",
    "chang": "Chang: every strongly regular graph with parameters (66,20,10,4) is T(12)",
    "delsarte_clique_bound": "Delsarte clique bound 1 - k/theta_min for strongly regular graphs",
    "spherical_representation": "Every scheme with these parameters embeds in S^9 with angle "
                                "set A(X) via its first eigenspace projector",
}

NOTES = (
    "Q is defined by P Q = 66 I, i.e. Q = 66 P^-1; the reference Q table satisfies this "
    "identity exactly, whereas Q = (1/66) P^-1 would not.",
    "Permutation equivalence of Gram matrices is checked under the full symmetric group acting "
    "simultaneously on rows and columns.",
    "The eigenspace projector E1 and the edge relation E1 on Y1 are distinct objects; only the "
    "latter is computed.",
    "Candidates for Y1 and Y are enumerated by pattern multiset (840 and 4620 vectors) rather "
    "than by scanning all 3^10 sign patterns.",
)


@dataclass
class StageRecord:
    index: int
    name: str
    status: str = "skipped"
    counts: dict = field(default_factory=dict)
    digests: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    axioms_used: list = field(default_factory=list)
    message: str = ""

    def to_json(self) -> dict:
        return {"index": self.index, "name": self.name, "status": self.status,
                "counts": self.counts, "digests": self.digests, "witnesses": self.witnesses,
                "axioms_used": self.axioms_used, "message": self.message}


@dataclass
class Certificate:
    stages: list
    toolchain: dict
    wall_times: dict
    notes: tuple = NOTES

    @property
    def verdict(self) -> str:
        """pass iff every stage passed; partial when stages were skipped by ``--stage`` only."""
        if all(s.status == "pass" for s in self.stages):
            return "pass"
        if any(s.status == "fail" for s in self.stages):
            return "fail"
        return "partial"

    def stage(self, name: str) -> StageRecord:
        return next(s for s in self.stages if s.name == name)

    def to_json(self, include_timings: bool = True) -> dict:
        out = {"schema": SCHEMA, "verdict": self.verdict, "toolchain": self.toolchain,
               "notes": list(self.notes), "axioms": AXIOMS,
               "stages": [s.to_json() for s in self.stages]}
        if include_timings:
            out["wall_times_ms"] = self.wall_times
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unknown certificate schema {data.get('schema')!r}")
        stages = [StageRecord(**{k: s[k] for k in ("index", "name", "status", "counts", "digests",
                                                   "witnesses", "axioms_used", "message")})
                  for s in data["stages"]]
        return cls(stages, data["toolchain"], data.get("wall_times_ms", {}),
                   tuple(data.get("notes", NOTES)))


@dataclass
class PipelineConfig:
    stage: int | None = None
    threads: int = 1
    cache_dir: str | None = None
    corrupt_expected_L: bool = False   # test hook for the failure path
    lemma2_sample_fraction: float = 0.01
    seed: int = 20240101


def sha256_text(s: str) -> str:
    return hashlib.sha256(s.encode()).hexdigest()


def _rows_str(m) -> list[list[str]]:
    return [[rat_str(Fraction(x)) for x in row] for row in m]


def _vec_str(v) -> str:
    return ",".join(rat_str(x) for x in v)


def _parse_vec(line: str) -> tuple:
    return tuple(Fraction(x) for x in line.split(","))


class _Cache:
    """Content-fingerprinted stage artifacts on disk (disabled when ``root`` is None)."""

    def __init__(self, root: str | None):
        self.root = Path(root) if root else None
        if self.root:
            self.root.mkdir(parents=True, exist_ok=True)

    def load(self, name: str, key: str) -> str | None:
        if not self.root:
            return None
        path = self.root / name
        meta = self.root / (name + ".sha256")
        if not path.exists() or not meta.exists():
            return None
        text = path.read_text()
        stored = meta.read_text().split()
        if len(stored) != 2 or stored[0] != sha256_text(text) or stored[1] != key:
            log.warning("cache entry %s is stale or corrupt; recomputing", name)
            return None
        return text

    def store(self, name: str, key: str, text: str) -> None:
        if not self.root:
            return
        (self.root / name).write_text(text)
        (self.root / (name + ".sha256")).write_text(f"{sha256_text(text)} {key}\n")


class _Context:
    """Lazily computed objects shared between stages."""

    def __init__(self, cfg: PipelineConfig):
        self.cfg = cfg
        self.cache = _Cache(cfg.cache_dir)
        self._memo: dict = {}

    def _get(self, key: str, fn: Callable):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    @property
    def instance(self):
        return self._get("instance", designs.build_witt_instance)

    @property
    def design(self) -> designs.BlockDesign:
        def make():
            text = self.cache.load("design.txt", "w11-first-min-size")
            if text is not None:
                return designs.parse_design(text)
            d = designs.construct_witt_design()
            self.cache.store("design.txt", "w11-first-min-size", designs.format_design(d))
            return d
        return self._get("design", make)

    @property
    def design_scheme(self) -> scheme.AssociationScheme:
        return self._get("design_scheme", lambda: scheme.scheme_from_design(self.design))

    @property
    def frame(self) -> sphere.SimplexFrame:
        return self._get("frame", sphere.build_frame)

    @property
    def Y1(self) -> list:
        def make():
            text = self.cache.load("y1.txt", "y1-v1")
            if text is not None:
                return [_parse_vec(ln) for ln in text.splitlines() if ln]
            y1 = sphere.enumerate_Y1(self.frame)
            self.cache.store("y1.txt", "y1-v1", "".join(_vec_str(v) + "\n" for v in y1))
            return y1
        return self._get("Y1", make)

    @property
    def fixed_c2(self) -> list:
        return self._get("fixed_c2", lambda: sphere.fix_C2(self.frame, reference.C_MATRIX))

    @property
    def y1_graph(self) -> graphs.ColoredGraph:
        return self._get("y1_graph", lambda: sphere.y1_graph(self.frame, self.Y1))

    @property
    def cliques10(self) -> list:
        def make():
            key = "cliques10-" + sphere.vectors_fingerprint(self.Y1)
            text = self.cache.load("cliques10.txt", key)
            if text is not None:
                return [tuple(int(x) for x in ln.split()) for ln in text.splitlines() if ln]
            cl = graphs.enumerate_cliques(self.y1_graph, 10)
            self.cache.store("cliques10.txt", key, "".join(" ".join(map(str, c)) + "\n" for c in cl))
            return cl
        return self._get("cliques10", make)

    @property
    def Z(self) -> list:
        def make():
            Y = sphere.enumerate_Y(self.frame, self.fixed_c2)
            self._memo["Y"] = Y
            return sphere.filter_Z(self.frame, Y, self.fixed_c2)
        return self._get("Z", make)

    @property
    def z_split(self) -> sphere.ZSplit:
        return self._get("z_split", lambda: sphere.split_Z(self.frame, self.Z, self.fixed_c2))

    def expected_p(self):
        mats = [list(map(list, m)) for m in reference.L_MATRICES]
        if self.cfg.corrupt_expected_L:
            mats[1][1][1] += 1
        return scheme.p_tensor_from_matrices(mats)


def _require(cond: bool, message: str, witness=None):
    if not cond:
        raise VerificationError(message, witness)


# -- stages; each fills its record and raises VerificationError on failure

def _stage_design(ctx: _Context, rec: StageRecord):
    inst = ctx.instance
    rec.counts["columns"] = inst.columns
    rec.counts["rows"] = len(inst.rows)
    sols = designs.exact_cover_solve(inst, "enumerate", "min-size")
    count_leftmost = designs.exact_cover_solve(inst, "count", "leftmost")
    rec.counts["solutions_min_size"] = len(sols)
    rec.counts["solutions_leftmost"] = count_leftmost
    rec.counts["solutions_found"] = len(sols)
    _require(len(sols) == count_leftmost, "solution count depends on the column heuristic",
             (len(sols), count_leftmost))
    _require(all(designs.covers_exactly(inst, s) for s in sols), "a solution is not an exact cover")
    # intersection profiles of all solutions via incidence products
    profiles = set()
    for s in sols:
        inc = _incidence(s)
        inter = inc @ inc.T
        np.fill_diagonal(inter, -1)
        vals, cnts = np.unique(inter[inter >= 0], return_counts=True)
        profiles.add(tuple(zip(vals.tolist(), cnts.tolist())))
    _require(len(profiles) == 1, "solutions have different intersection profiles", sorted(profiles))
    d = ctx.design
    lam = designs.verify_t_design(d, 4)
    rec.counts["blocks"] = d.b
    rec.counts["lambda"] = lam
    _require(lam == 1, f"first solution is a 4-design with lambda={lam}")
    _require(designs.double_counting_holds(d, 4, lam), "double counting b C(k,4) = lambda C(v,4) fails")
    try:
        designs.verify_t_design(d, 5)
        _require(False, "design is unexpectedly a 5-design")
    except VerificationError:
        pass
    prof = designs.block_intersection_profile(d)
    _require(sorted(prof) == [1, 2, 3], f"block intersections {sorted(prof)}", prof)
    for s_, c in prof.items():
        rec.counts[f"ordered_pairs_meeting_in_{s_}"] = c
    text = designs.format_design(d)
    rec.digests["design_file"] = sha256_text(text)
    rec.witnesses["design"] = text.splitlines()


_ALL_BLOCKS = np.zeros((462, 11), dtype=np.int64)
for _r, _blk in enumerate(combinations(range(11), 5)):
    _ALL_BLOCKS[_r, list(_blk)] = 1


def _incidence(solution) -> np.ndarray:
    return _ALL_BLOCKS[list(solution)]


def _stage_scheme(ctx: _Context, rec: StageRecord):
    s = ctx.design_scheme
    rec.axioms_used.append("delsarte_design_scheme")
    p = scheme.verify_scheme_axioms(s)
    rec.counts["vertices"] = s.n
    rec.counts["classes"] = s.d
    for i in range(1, 4):
        rec.counts[f"valency_{i}"] = p[i][i][0]
    rec.witnesses["L"] = [_rows_str(scheme.intersection_matrix(p, i).tolist()) for i in range(4)]
    ctx._memo["p"] = p
    expected = ctx.expected_p()
    for i in range(4):
        for j in range(4):
            for k in range(4):
                _require(p[i][j][k] == expected[i][j][k],
                         f"p[{i}][{j}][{k}] = {p[i][j][k]}, expected {expected[i][j][k]}",
                         (i, j, k, p[i][j][k], expected[i][j][k]))


def _stage_eigen(ctx: _Context, rec: StageRecord):
    p = ctx._memo.get("p") or scheme.verify_scheme_axioms(ctx.design_scheme)
    P, Q, mults = scheme.eigenmatrices(p, 66)
    vals = tuple(p[i][i][0] for i in range(4))
    rec.witnesses["P"] = P.to_strings()
    rec.witnesses["Q"] = Q.to_strings()
    rec.counts.update({f"multiplicity_{i}": m for i, m in enumerate(mults)})
    _require(P == reference.P, "computed P differs from the reference table")
    _require(Q == reference.Q, "computed Q differs from the reference table")
    _require(mat_mul(P, Q) == RatMatrix.identity(4).scale(66), "P Q != 66 I")
    _require(mults == reference.MULTIPLICITIES, f"multiplicities {mults}")
    _require(sum(mults) == 66, "multiplicities do not sum to n")
    for i in range(4):
        for j in range(4):
            _require(mults[i] * P[i, j] == vals[j] * Q[j, i], f"duality fails at ({i}, {j})")
    q = scheme.krein_parameters(P, Q, vals, mults, 66)
    rec.witnesses["krein"] = [[[rat_str(x) for x in r] for r in m] for m in q]
    _require(scheme.krein_nonnegative(q), "negative Krein parameter")
    _require(scheme.is_q_polynomial(q), "Krein parameters are not tridiagonal in E1")
    rec.counts["krein_nonnegative"] = 1
    rec.counts["q_polynomial"] = 1
    ang = scheme.angle_set(Q)
    rec.witnesses["angle_set"] = [rat_str(a) for a in ang]
    _require(ang == reference.ANGLES, f"angle set {ang}")
    _require(len(set(ang)) == 3 and 1 not in ang, "spherical representation is not injective")
    ctx._memo["P"] = P


def _stage_srg(ctx: _Context, rec: StageRecord):
    rec.axioms_used.append("chang")
    g = graphs.relation_graph(ctx.design_scheme, 2)
    quad = graphs.srg_check(g)
    rec.witnesses["srg_R2"] = list(quad)
    _require(quad == reference.SRG_R2, f"(X, R2) has parameters {quad}")
    t12 = graphs.triangular_graph(12)
    rec.witnesses["srg_T12"] = list(graphs.srg_check(t12))
    phi = graphs.find_isomorphism(g, t12)
    _require(phi is not None and graphs.is_isomorphism(g, t12, phi), "no isomorphism (X, R2) -> T(12)")
    rec.witnesses["isomorphism_R2_to_T12"] = phi
    rec.counts["isomorphism_found"] = 1
    P = ctx._memo.get("P") or reference.P
    col2 = [int(P[i, 2]) for i in range(4)]
    rec.axioms_used.append("delsarte_clique_bound")
    facts = graphs.verify_delsarte_clique_facts(t12, col2)
    rec.counts["t12_max_cliques"] = facts["num_max_cliques"]
    rec.counts["delsarte_bound"] = facts["delsarte_bound"]
    rec.counts["cliques_per_vertex"] = facts["cliques_per_vertex"]
    rec.counts["outside_neighbours"] = facts["outside_neighbours"]
    rec.witnesses["cliques_at_x"] = [[f"{{{a + 1},{b + 1}}}" for a, b in c] for c in facts["cliques_at_x"]]
    c1 = sorted((0, j) for j in range(1, 12))
    c2 = sorted(tuple(sorted((1, j))) for j in range(12) if j != 1)
    _require(sorted(map(sorted, facts["cliques_at_x"])) == sorted([c1, c2]),
             "cliques through x={1,2} are not C1 and C2")


def _stage_lemma2(ctx: _Context, rec: StageRecord):
    rec.axioms_used.append("spherical_representation")
    f = ctx.frame
    rec.counts["frame_rank"] = 10
    Y1 = ctx.Y1
    rec.counts["y1"] = len(Y1)
    rec.counts["y1_multinomial"] = sphere.multinomial(6, 1, 3)
    _require(len(Y1) == sphere.multinomial(6, 1, 3), "the unit-norm filter rejected Y1 candidates")
    _require(len(Y1) == reference.COUNTS["y1"], f"|Y1| = {len(Y1)}")
    c2 = ctx.fixed_c2
    rec.witnesses["fixed_c2"] = [_vec_str(v) for v in c2]
    g = ctx.y1_graph
    deg = set(g.adjacency().sum(axis=1).tolist())
    _require(len(deg) == 1, f"Y1 graph degrees {sorted(deg)}")
    rec.counts["y1_graph_degree"] = deg.pop()
    cliques = ctx.cliques10
    rec.counts["cliques10"] = len(cliques)
    rec.digests["y1"] = sphere.vectors_fingerprint(Y1)
    rec.digests["cliques10"] = sha256_text("".join(" ".join(map(str, c)) + "\n" for c in cliques))
    _require(len(cliques) == reference.COUNTS["cliques10"], f"{len(cliques)} cliques of order 10")
    pos = {v: i for i, v in enumerate(Y1)}
    fixed_idx = tuple(sorted(pos[v] for v in c2))
    _require(fixed_idx in set(cliques), "fixed C2 is not a clique of the Y1 graph")
    rep = sphere.lemma2_check(f, Y1, c2, cliques, threads=ctx.cfg.threads,
                              sample_fraction=ctx.cfg.lemma2_sample_fraction, seed=ctx.cfg.seed)
    rec.digests["gram_C1_C2"] = rep.reference_digest
    rec.counts["digests_equal"] = rep.cliques if rep.all_equal else (rep.first_divergence or 0)
    rec.counts["isomorphism_sample"] = rep.sample_size
    rec.witnesses["gram_C1_C2"] = rep.reference_gram
    _require(rep.all_equal, f"clique {rep.first_divergence} has a different Gram class",
             rep.first_divergence)
    _require(rep.sample_isomorphisms_ok, "a sampled clique failed the explicit isomorphism check")


def _stage_lemma3(ctx: _Context, rec: StageRecord):
    f = ctx.frame
    a, b = sphere.forced_pattern(2)
    rec.counts["forced_alpha1"] = a
    rec.counts["forced_alpha3"] = b
    _require((a, b) == (6, 3), f"forced pattern {(a, b)}")
    cands = sphere.enumerate_Y_candidates(f)
    rec.counts["y_before_removal"] = len(cands)
    _require(len(cands) == sphere.multinomial(6, 2, 3), "the unit-norm filter rejected Y candidates")
    Z = ctx.Z
    Y = ctx._memo["Y"] if "Y" in ctx._memo else sphere.enumerate_Y(f, ctx.fixed_c2)
    rec.counts["y"] = len(Y)
    rec.counts["z"] = len(Z)
    _require(len(Y) == reference.COUNTS["y"], f"|Y| = {len(Y)}")
    _require(len(Z) == reference.COUNTS["z"], f"|Z| = {len(Z)}")
    sp = ctx.z_split
    rec.counts["z1"] = len(sp.Z1)
    rec.counts["z2"] = len(sp.Z2)
    rec.counts["cross_pairs_outside_angles"] = len(sp.Z1) * len(sp.Z2)
    _require(sp.component_sizes == (45, 45), f"component sizes {sp.component_sizes}")
    _require(sp.angles_Z1 == sp.angles_Z2 == tuple(rat_str(x) for x in sorted(reference.ANGLES)),
             "A(Z1) or A(Z2) is not the full angle set")
    rec.digests["gram_C1_C2_Z1"] = sp.digest_Z1
    rec.digests["gram_C1_C2_Z2"] = sp.digest_Z2
    _require(sp.digest_Z1 == sp.digest_Z2, "the two completions are not equivalent")
    _require(sp.isomorphism_witness is not None, "no explicit isomorphism between the completions")
    zi = {v: i for i, v in enumerate(Z)}
    rec.witnesses["z"] = [_vec_str(v) for v in Z]
    rec.witnesses["z1_indices"] = [zi[v] for v in sp.Z1]
    rec.witnesses["z2_indices"] = [zi[v] for v in sp.Z2]
    rec.witnesses["isomorphism_Z1_to_Z2"] = sp.isomorphism_witness


def _stage_final(ctx: _Context, rec: StageRecord):
    f = ctx.frame
    cfg = sphere.assemble_config(f, ctx.fixed_c2, ctx.z_split.Z1)
    rec.counts["points"] = len(cfg.points)
    s, p, match = sphere.final_scheme_check(f, cfg, ctx.expected_p())
    rec.witnesses["L"] = [_rows_str(scheme.intersection_matrix(p, i).tolist()) for i in range(4)]
    _require(match, "configuration scheme has different intersection numbers")
    per_vertex = {tuple(sorted(np.bincount(np.array(r), minlength=4)[1:].tolist())) for r in s.rel}
    counts = np.bincount(np.array(s.rel[0]), minlength=4)[1:].tolist()
    _require(len(per_vertex) == 1 and counts == [30, 20, 15], f"per-vertex class counts {counts}")
    rec.counts.update({f"class_{i + 1}_per_vertex": c for i, c in enumerate(counts)})
    ga = graphs.ColoredGraph.from_values(s.rel)
    gb = graphs.ColoredGraph.from_values(ctx.design_scheme.rel)
    phi = graphs.find_isomorphism(ga, gb)
    _require(phi is not None and graphs.is_isomorphism(ga, gb, phi),
             "configuration scheme is not isomorphic to the design scheme")
    rec.counts["isomorphic_to_design_scheme"] = 1
    rec.witnesses["isomorphism_config_to_design"] = phi
    rec.witnesses["labels"] = list(cfg.labels)
    rec.witnesses["gram"] = sphere.gram_strings(cfg.points)
    rec.digests["gram"] = sha256_text(json.dumps(rec.witnesses["gram"]))


_RUNNERS = {1: _stage_design, 2: _stage_scheme, 3: _stage_eigen, 4: _stage_srg,
            5: _stage_lemma2, 6: _stage_lemma3, 7: _stage_final}


def toolchain() -> dict:
    import numpy
    return {"witt_uniq": __version__, "python": platform.python_version(),
            "numpy": numpy.__version__, "kernels": kernels.BACKEND}


def run_pipeline(cfg: PipelineConfig | None = None) -> Certificate:
    cfg = cfg or PipelineConfig()
    if cfg.cache_dir is None and os.environ.get(CACHE_ENV):
        cfg.cache_dir = os.environ[CACHE_ENV]
    ctx = _Context(cfg)
    records = [StageRecord(i, name) for i, name in STAGES]
    times = {}
    failed = False
    for rec in records:
        if failed or (cfg.stage is not None and rec.index != cfg.stage):
            continue
        t0 = time.perf_counter()
        try:
            _RUNNERS[rec.index](ctx, rec)
            rec.status = "pass"
        except VerificationError as exc:
            rec.status = "fail"
            rec.message = str(exc)
            if exc.witness is not None:
                rec.witnesses["failure"] = _jsonable(exc.witness)
            failed = True
        times[rec.name] = round((time.perf_counter() - t0) * 1000)
        log.info("stage %d %s: %s (%d ms)", rec.index, rec.name, rec.status, times[rec.name])
    return Certificate(records, toolchain(), times)


def _jsonable(x):
    if isinstance(x, Fraction):
        return rat_str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


# -- reports

def render_report(c: Certificate, fmt: str = "text", include_timings: bool = True) -> str:
    if fmt == "json":
        return json.dumps(c.to_json(include_timings), sort_keys=True, indent=1) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = [f"witt-uniq certificate ({SCHEMA})", f"verdict: {c.verdict.upper()}",
           "toolchain: " + ", ".join(f"{k} {v}" for k, v in sorted(c.toolchain.items())), ""]
    for s in c.stages:
        t = c.wall_times.get(s.name)
        timing = f"  [{t} ms]" if (t is not None and include_timings) else ""
        out.append(f"stage {s.index} {s.name:<14} {s.status.upper()}{timing}")
        if s.message:
            out.append(f"    {s.message}")
        for k, v in s.counts.items():
            out.append(f"    {k} = {v}")
        for k, v in s.digests.items():
            out.append(f"    digest {k} = {v[:16]}...")
        for ax in s.axioms_used:
            out.append(f"    external axiom: {AXIOMS.get(ax, ax)}")
        out.extend(_tables(s))
    out.append("")
    out.append("external axioms (cited, not machine-checked):")
    for key in ("chang", "delsarte_clique_bound", "delsarte_design_scheme", "spherical_representation"):
        out.append(f"  - {AXIOMS[key]}")
    out.append("")
    out.append("notes:")
    out.extend(f"  - {n}" for n in c.notes)
    return "\n".join(out) + "\n"


def _side_by_side(title: str, got, want) -> list[str]:
    w = max(len(x) for r in list(got) + list(want) for x in r) + 1
    lines = [f"    {title}: computed | expected"]
    for a, b in zip(got, want):
        lines.append("      " + "".join(x.rjust(w) for x in a) + "  | " + "".join(x.rjust(w) for x in b))
    return lines


def _tables(s: StageRecord) -> list[str]:
    out = []
    if s.name == "scheme" and "L" in s.witnesses:
        for i in (1, 2, 3):
            out += _side_by_side(f"L{i}", s.witnesses["L"][i], _rows_str(reference.L_MATRICES[i]))
    if s.name == "eigenmatrices" and "P" in s.witnesses:
        out += _side_by_side("P", s.witnesses["P"], reference.P.to_strings())
        out += _side_by_side("Q", s.witnesses["Q"], reference.Q.to_strings())
        if "angle_set" in s.witnesses:
            out.append("    angle set A(X) = {" + ", ".join(s.witnesses["angle_set"]) + "}")
    if s.name == "srg_t12" and "srg_R2" in s.witnesses:
        out.append("    (X, R2) is strongly regular with parameters (%d,%d,%d,%d)" % tuple(s.witnesses["srg_R2"]))
    return out
