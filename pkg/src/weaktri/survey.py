"""Named matrix-space families and exhaustive survey campaigns over the
Grassmannian of matrix subspaces.

A campaign sweeps every candidate subspace of the target dimension (optionally
constrained to contain given matrices, e.g. the identity), decides weak
triangularizability for each, and fully verifies every hit: independent
exhaustive re-check, identity membership, flag recovery, and structure-map
extraction.

The exhaustive scan reduces modulo the constraint span and enumerates RREF
bases row by row, bottom row first.  A quotient class is marked bad when some
lift of it over the constraint span has a non-split characteristic
polynomial; any candidate whose partial span hits a bad class is rejected
together with its entire subtree (all such candidates contain that same bad
element), with skipped counts tracked exactly.  Badness is invariant under
scalars, so only one representative per new projective point is tested.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceededError, PreconditionError, TheoremViolationError
from .flags import extract_structure_maps, recover_flag
from .gf import FieldCtx, Poly, splits_over
from .grassmann import (
    enumerate_subspaces,
    free_positions,
    grassmann_count,
    pattern_size,
    pivot_patterns,
)
from .linalg import Mat, char_poly, invert, rref, span_rows
from .spaces import DEFAULT_BUDGET, MatSpace, format_spacefile, parse_spacefile
from .triang import space_weakly_triangularizable

DEFAULT_SEED = 1729

WITNESS_SWEEP_CAP = 100_000


# -- named families -------------------------------------------------------------


def gen_triangular(n, field, conjugate_by=None) -> MatSpace:
    """Upper-triangular matrices, optionally conjugated by an invertible P."""
    space = MatSpace.from_span(
        [Mat.unit(field, n, i, j) for i in range(n) for j in range(i, n)],
        field=field,
        n=n,
    )
    if conjugate_by is not None:
        space = space.conjugate(conjugate_by)
    return space


def gen_sym(n, field) -> MatSpace:
    """Symmetric matrices; dimension n(n+1)/2."""
    mats = [Mat.unit(field, n, i, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(Mat.unit(field, n, i, j) + Mat.unit(field, n, j, i))
    return MatSpace.from_span(mats, field=field, n=n)


def gen_sl(n, field) -> MatSpace:
    """Trace-zero matrices; dimension n^2 - 1."""
    mats = [Mat.unit(field, n, i, j) for i in range(n) for j in range(n) if i != j]
    for i in range(n - 1):
        mats.append(Mat.unit(field, n, i, i) - Mat.unit(field, n, n - 1, n - 1))
    return MatSpace.from_span(mats, field=field, n=n)


def gen_joint(spaces) -> MatSpace:
    """Block upper-triangular space with the given diagonal blocks and
    arbitrary blocks above the diagonal."""
    if not spaces:
        raise ValueError("joint of no spaces")
    field = spaces[0].field
    if any(s.field != field for s in spaces):
        raise ValueError("joint blocks over mixed fields")
    sizes = [s.n for s in spaces]
    total = sum(sizes)
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    mats = []
    for block, space in enumerate(spaces):
        off = offsets[block]
        for b in space.basis:
            entries = [0] * (total * total)
            for i in range(space.n):
                for j in range(space.n):
                    entries[(off + i) * total + (off + j)] = b.entry(i, j)
            mats.append(Mat(field, total, entries))
    for bi in range(len(sizes)):
        for bj in range(bi + 1, len(sizes)):
            for i in range(sizes[bi]):
                for j in range(sizes[bj]):
                    mats.append(Mat.unit(field, total, offsets[bi] + i, offsets[bj] + j))
    return MatSpace.from_span(mats, field=field, n=total)


def gen_random(n, field, dim, seed) -> MatSpace:
    """A uniformly seeded random subspace of the requested dimension."""
    if not 0 <= dim <= n * n:
        raise ValueError(f"dimension {dim} impossible in {n}x{n} matrices")
    rng = random.Random(seed)
    mats = []
    space = MatSpace.from_span([], field=field, n=n)
    while space.dim < dim:
        mats.append(Mat(field, n, tuple(rng.randrange(field.q) for _ in range(n * n))))
        space = MatSpace.from_span(mats, field=field, n=n)
        mats = list(space.basis)
    return space


def count_flags(n, field) -> int:
    """Number of complete flags of F^n.

    Product formula, cross-checked against direct chain enumeration for
    n <= 3 (both must agree).
    """
    q = field.q
    formula = 1
    for i in range(2, n + 1):
        step, rem = divmod(q**i - 1, q - 1)
        assert rem == 0
        formula *= step
    if n <= 3:
        direct = _count_chains(n, field)
        if direct != formula:
            raise TheoremViolationError(
                f"flag count mismatch: direct {direct} vs formula {formula}"
            )
    return formula


def _count_chains(n, field):
    def extend(prev_rows, k):
        if k == n:
            return 1
        total = 0
        for rows in enumerate_subspaces(n, k, field, must_contain=prev_rows):
            total += extend(rows, k + 1)
        return total

    return extend((), 1)


# -- campaign data --------------------------------------------------------------


@dataclass
class CampaignSpec:
    """What to sweep: candidates are `dim`-dimensional subspaces of M_n(F)
    containing every matrix in `constraints`."""

    n: int
    field: FieldCtx
    dim: int
    constraints: tuple = ()
    mode: str = "exhaustive"
    count: int = 0
    seed: int = DEFAULT_SEED
    shards: int = 1
    budget: int | None = None
    journal: str | None = None
    resume: bool = False
    collect_witnesses: bool = False

    def summary_line(self):
        names = "+".join(
            "identity" if m == Mat.identity(self.field, self.n) else "custom"
            for m in self.constraints
        )
        return (
            f"n={self.n} field={self.field.descriptor()} dim={self.dim} "
            f"constraints={names or 'none'} mode={self.mode} shards={self.shards}"
        )


@dataclass
class HitRecord:
    space: MatSpace
    contains_identity: bool = False
    recovered: bool = False
    chain: tuple | None = None
    extraction_ok: bool | None = None
    alarm: str | None = None

    @property
    def ok(self):
        return (
            self.contains_identity
            and self.recovered
            and self.alarm is None
            and self.extraction_ok is not False
        )


@dataclass
class CampaignReport:
    spec_line: str
    total: int
    expected_total: int | None
    hits: list = dc_field(default_factory=list)
    alarms: list = dc_field(default_factory=list)
    shard_stats: list = dc_field(default_factory=list)
    witnesses: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def hit_count(self):
        return len(self.hits)

    @property
    def all_hits_ok(self):
        return all(h.ok for h in self.hits)

    def to_text(self):
        lines = [
            f"# campaign: {self.spec_line}",
            f"# total: {self.total}",
            f"# expected_total: {self.expected_total if self.expected_total is not None else '-'}",
            f"# hits: {self.hit_count}",
            f"# hits_verified: {'yes' if self.all_hits_ok else 'NO'}",
            f"# alarms: {len(self.alarms)}",
        ]
        for alarm in self.alarms:
            lines.append(f"# alarm: {alarm}")
        for stat in self.shard_stats:
            lines.append(
                "# shard {idx} range {lo}..{hi} total {total} hits {hits}".format(**stat)
            )
        for i, hit in enumerate(self.hits):
            lines.append(f"hit {i}")
            lines.append(
                f"  verified: identity={hit.contains_identity} recovered={hit.recovered} "
                f"extraction={'n/a' if hit.extraction_ok is None else hit.extraction_ok}"
            )
            for raw in format_spacefile(hit.space).splitlines():
                lines.append("  " + raw)
        return "\n".join(lines) + "\n"


# -- quotient reduction -----------------------------------------------------------


class _Reduction:
    """Coordinates of the quotient of the vectorized ambient space by the
    constraint span, with the section used to lift classes back."""

    def __init__(self, field, n, constraints):
        self.field = field
        self.n = n
        self.m = n * n
        rows = [m.entries for m in constraints]
        reduced, pivots = rref(rows, field)
        if len(reduced) != len(rows):
            raise PreconditionError("constraint matrices are linearly dependent")
        self.rows = reduced
        self.pivots = pivots
        self.section_cols = [c for c in range(self.m) if c not in pivots]
        self.quotient_dim = self.m - len(reduced)

    def lift_rows(self, quotient_rows):
        """Full-space canonical basis of the candidate with these quotient rows."""
        lifted = []
        for qrow in quotient_rows:
            full = [0] * self.m
            for c, v in zip(self.section_cols, qrow):
                full[c] = v
            lifted.append(tuple(full))
        return span_rows(list(self.rows) + lifted, self.field)

    def space_from(self, quotient_rows) -> MatSpace:
        rows = self.lift_rows(quotient_rows)
        return MatSpace.from_span(
            [Mat(self.field, self.n, r) for r in rows], field=self.field, n=self.n
        )

    def constraint_span_elements(self):
        F = self.field
        for coeffs in itertools.product(F.elements(), repeat=len(self.rows)):
            acc = [0] * self.m
            for c, row in zip(coeffs, self.rows):
                if c:
                    for i, e in enumerate(row):
                        if e:
                            acc[i] = F.add(acc[i], F.mul(c, e))
            yield tuple(acc)


def _split_table(field, n):
    """Boolean table over packed monic degree-n coefficient vectors."""
    q = field.q
    table = [False] * (q**n)
    for tail in itertools.product(field.elements(), repeat=n):
        poly = Poly(field, tail + (1,))
        idx = 0
        for c in reversed(tail):
            idx = idx * q + c
        table[idx] = splits_over(poly)
    return table


def _goodness_table(reduction: _Reduction):
    """good[packed class] == every lift over the constraint span splits."""
    field, n, m = reduction.field, reduction.n, reduction.m
    q = field.q
    split = _split_table(field, n)
    span = list(reduction.constraint_span_elements())
    size = q**reduction.quotient_dim
    good = [True] * size
    for idx in range(size):
        rest, digits = idx, []
        for _ in range(reduction.quotient_dim):
            rest, r = divmod(rest, q)
            digits.append(r)
        base = [0] * m
        for c, v in zip(reduction.section_cols, digits):
            base[c] = v
        for z in span:
            entries = [field.add(a, b) for a, b in zip(base, z)] if any(z) else base
            poly = char_poly(Mat(field, n, entries))
            pidx = 0
            for c in reversed(poly.coeffs[:-1]):
                pidx = pidx * q + c
            if not split[pidx]:
                good[idx] = False
                break
    return good


# -- the pruned scan --------------------------------------------------------------


def _scan_patterns(field_sig, m, patterns, good):
    """Exhaustively decide all candidates whose RREF pivots lie in
    ``patterns``; returns (candidates_decided, hit_row_lists).

    Rows are assigned bottom-up.  A bad projective point among the
    combinations involving the newest row rejects the row together with every
    completion of the remaining rows above it.
    """
    field = FieldCtx(*field_sig)
    q = field.q
    elements = tuple(field.elements())
    add_tab = [[field.add(a, b) for b in elements] for a in elements]
    mul_tab = [[field.mul(a, b) for b in elements] for a in elements]
    pows = [q**i for i in range(m)]
    decided = 0
    hits = []
    for pattern in patterns:
        k = len(pattern)
        if k == 0:
            decided += 1
            hits.append(())
            continue
        pivot_set = set(pattern)
        frees = [
            [c for c in range(pattern[i] + 1, m) if c not in pivot_set]
            for i in range(k)
        ]
        skip = [1] * k
        for i in range(1, k):
            skip[i] = skip[i - 1] * q ** len(frees[i - 1])
        templates = []
        for i in range(k):
            t = [0] * m
            t[pattern[i]] = 1
            templates.append(t)
        chosen = [None] * k
        bad_total = 0
        pattern_hits = []

        def rec(i, combos):
            nonlocal bad_total
            frees_i = frees[i]
            skip_i = skip[i]
            template = templates[i]
            for values in itertools.product(elements, repeat=len(frees_i)):
                row = template[:]
                for pos, v in zip(frees_i, values):
                    row[pos] = v
                ok = True
                for w in combos:
                    idx = 0
                    for a, b, pw in zip(row, w, pows):
                        idx += add_tab[a][b] * pw
                    if not good[idx]:
                        ok = False
                        break
                if not ok:
                    bad_total += skip_i
                    continue
                chosen[i] = tuple(row)
                if i == 0:
                    pattern_hits.append(tuple(chosen))
                    continue
                grown = list(combos)
                for c in elements[1:]:
                    crow = [mul_tab[c][v] for v in row]
                    for w in combos:
                        grown.append(tuple(add_tab[a][b] for a, b in zip(crow, w)))
                rec(i - 1, grown)

        rec(k - 1, [(0,) * m])
        expected = pattern_size(pattern, m, q)
        got = bad_total + len(pattern_hits)
        if got != expected:
            raise TheoremViolationError(
                f"scan bookkeeping drift on pattern {pattern}: {got} != {expected}"
            )
        decided += expected
        hits.extend(pattern_hits)
    return decided, hits


def _scan_shard(args):
    (field_sig, m, patterns, good, idx, lo, hi) = args
    decided, hits = _scan_patterns(field_sig, m, patterns, good)
    return {"idx": idx, "lo": lo, "hi": hi, "total": decided, "hits": hits}


def _field_sig(field):
    return (field.p, field.k, field.modulus, field.exploratory)


def _shard_ranges(sizes, shards):
    """Contiguous index ranges with roughly balanced candidate counts."""
    total = sum(sizes)
    shards = max(1, min(shards, len(sizes))) if sizes else 1
    ranges = []
    start = 0
    acc = 0
    target = total / shards if shards else 1
    for idx in range(len(sizes)):
        acc += sizes[idx]
        if acc >= target * (len(ranges) + 1) and len(ranges) < shards - 1:
            ranges.append((start, idx + 1))
            start = idx + 1
    ranges.append((start, len(sizes)))
    return [r for r in ranges if r[0] < r[1]] or [(0, 0)]


# -- journal ----------------------------------------------------------------------


def _journal_header(spec):
    return f"# campaign journal: {spec.summary_line()}"


def _write_journal_entry(path, spec, stat, hit_spaces, new_file):
    mode = "w" if new_file else "a"
    with open(path, mode) as fh:
        if new_file:
            fh.write(_journal_header(spec) + "\n")
        fh.write(
            "shard {idx} range {lo}..{hi} total {total} hits {hits}\n".format(**stat)
        )
        for space in hit_spaces:
            fh.write(format_spacefile(space))
        fh.flush()
        os.fsync(fh.fileno())


def _load_journal(path, spec):
    """Completed shard stats and their hit spaces, keyed by shard index."""
    if not os.path.exists(path):
        return {}
    done = {}
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        return {}
    if lines[0] != _journal_header(spec):
        raise PreconditionError(
            "journal belongs to a different campaign; refuse to resume"
        )
    current = None
    block = []

    def close_block():
        if current is None:
            return
        spaces = []
        # hit blocks start on their "field" header lines
        starts = [i for i, line in enumerate(block) if line.startswith("field ")]
        for si, start in enumerate(starts):
            end = starts[si + 1] if si + 1 < len(starts) else len(block)
            spaces.append(
                parse_spacefile(
                    "\n".join(block[start:end]),
                    exploratory=spec.field.exploratory,
                )
            )
        if len(spaces) != current["hits"]:
            raise PreconditionError("journal is truncated; delete it and rerun")
        done[current["idx"]] = (current, spaces)

    for line in lines[1:]:
        if line.startswith("shard "):
            close_block()
            parts = line.split()
            lo, _, hi = parts[3].partition("..")
            current = {
                "idx": int(parts[1]),
                "lo": int(lo),
                "hi": int(hi),
                "total": int(parts[5]),
                "hits": int(parts[7]),
            }
            block = []
        elif line.startswith("#") or not line.strip():
            continue
        else:
            block.append(line)
    close_block()
    return done


# -- campaign driver ---------------------------------------------------------------


def run_campaign(spec: CampaignSpec) -> CampaignReport:
    """Run the sweep described by ``spec`` and fully verify every hit."""
    started = time.time()
    field, n = spec.field, spec.n
    if spec.dim < len(spec.constraints):
        raise PreconditionError("target dimension below the constraint count")
    for m in spec.constraints:
        if m.field != field or m.n != n:
            raise PreconditionError("constraint matrix in the wrong ambient space")
    reduction = _Reduction(field, n, spec.constraints)
    sub_dim = spec.dim - len(spec.constraints)
    if spec.mode == "exhaustive":
        report = _run_exhaustive(spec, reduction, sub_dim)
    elif spec.mode == "random":
        report = _run_random(spec, reduction, sub_dim)
    else:
        raise ValueError(f"unknown campaign mode {spec.mode!r}")
    report.elapsed = time.time() - started
    return report


def _run_exhaustive(spec, reduction, sub_dim):
    field = spec.field
    q = field.q
    limit = DEFAULT_BUDGET if spec.budget is None else spec.budget
    expected = grassmann_count(reduction.quotient_dim, sub_dim, q)
    if expected > limit:
        raise BudgetExceededError(
            f"{expected} candidates exceed the campaign budget {limit}"
        )
    report = CampaignReport(spec.summary_line(), 0, expected)

    if spec.collect_witnesses:
        if expected > WITNESS_SWEEP_CAP:
            raise BudgetExceededError(
                f"witness sweeps are capped at {WITNESS_SWEEP_CAP} candidates"
            )
        return _run_witness_sweep(spec, reduction, sub_dim, report)

    # a bad element inside the constraint span dooms every candidate at once
    span_bad = None
    for z in reduction.constraint_span_elements():
        if not splits_over(char_poly(Mat(field, reduction.n, z))):
            span_bad = z
            break
    if span_bad is not None:
        report.total = expected
        report.shard_stats.append(
            {"idx": 0, "lo": 0, "hi": 0, "total": expected, "hits": 0}
        )
        _verify_hits(spec, report)
        return report

    good = _goodness_table(reduction)
    patterns = pivot_patterns(reduction.quotient_dim, sub_dim)
    sizes = [pattern_size(p, reduction.quotient_dim, q) for p in patterns]
    ranges = _shard_ranges(sizes, spec.shards)

    done = {}
    journal_has_header = False
    if spec.journal and spec.resume:
        done = _load_journal(spec.journal, spec)
        journal_has_header = os.path.exists(spec.journal)

    jobs = []
    for idx, (lo, hi) in enumerate(ranges):
        if idx in done:
            continue
        jobs.append(
            (
                _field_sig(field),
                reduction.quotient_dim,
                patterns[lo:hi],
                good,
                idx,
                lo,
                hi,
            )
        )

    results = {}
    if jobs:
        if spec.shards > 1 and len(jobs) > 1:
            workers = min(len(jobs), spec.shards, os.cpu_count() or 1)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for out in pool.map(_scan_shard, jobs):
                    results[out["idx"]] = out
        else:
            for job in jobs:
                out = _scan_shard(job)
                results[out["idx"]] = out

    hit_spaces = {}
    for idx in sorted(results):
        out = results[idx]
        spaces = [reduction.space_from(rows) for rows in out["hits"]]
        hit_spaces[idx] = spaces
        stat = {
            "idx": idx,
            "lo": out["lo"],
            "hi": out["hi"],
            "total": out["total"],
            "hits": len(spaces),
        }
        results[idx]["stat"] = stat
        if spec.journal:
            _write_journal_entry(
                spec.journal, spec, stat, spaces, new_file=not journal_has_header
            )
            journal_has_header = True

    merged = []
    for idx in sorted(set(done) | set(results)):
        if idx in done:
            stat, spaces = done[idx]
            report.shard_stats.append(stat)
            merged.extend(spaces)
        else:
            report.shard_stats.append(results[idx]["stat"])
            merged.extend(hit_spaces[idx])

    report.total = sum(stat["total"] for stat in report.shard_stats)
    if report.total != expected:
        report.alarms.append(
            f"candidate count {report.total} disagrees with the Gaussian binomial {expected}"
        )
    merged.sort(key=lambda s: s.key())
    report.hits = [HitRecord(space=s) for s in merged]
    _verify_hits(spec, report)
    return report


def _run_witness_sweep(spec, reduction, sub_dim, report):
    """Naive per-candidate sweep retaining a witness for every rejection."""
    field = spec.field
    total = 0
    hits = []
    for rows in enumerate_subspaces(
        reduction.quotient_dim, sub_dim, field, budget=WITNESS_SWEEP_CAP
    ):
        total += 1
        space = reduction.space_from(rows)
        verdict = space_weakly_triangularizable(space, budget=spec.budget)
        if verdict:
            hits.append(space)
        else:
            report.witnesses.append((space.key(), verdict.witness.entries))
    report.total = total
    report.shard_stats.append(
        {"idx": 0, "lo": 0, "hi": 0, "total": total, "hits": len(hits)}
    )
    hits.sort(key=lambda s: s.key())
    report.hits = [HitRecord(space=s) for s in hits]
    _verify_hits(spec, report)
    return report


def _run_random(spec, reduction, sub_dim, *_):
    """Seeded random search; returns hits found among `count` samples."""
    field = spec.field
    rng = random.Random(spec.seed)
    report = CampaignReport(spec.summary_line(), 0, None)
    seen = set()
    hits = []
    for _ in range(spec.count):
        while True:
            rows = [
                tuple(rng.randrange(field.q) for _ in range(reduction.quotient_dim))
                for _ in range(sub_dim)
            ]
            reduced, _pivots = rref(rows, field)
            if len(reduced) == sub_dim:
                break
        report.total += 1
        space = reduction.space_from(reduced)
        if space.key() in seen:
            continue
        seen.add(space.key())
        if space_weakly_triangularizable(space, budget=spec.budget):
            hits.append(space)
    hits.sort(key=lambda s: s.key())
    report.hits = [HitRecord(space=s) for s in hits]
    _verify_hits(spec, report)
    return report


def _verify_hits(spec, report):
    field, n = spec.field, spec.n
    identity = Mat.identity(field, n)
    for hit in report.hits:
        space = hit.space
        verdict = space_weakly_triangularizable(space, budget=spec.budget)
        if not verdict:
            hit.alarm = "scan accepted a space with a non-split element"
            report.alarms.append(hit.alarm)
            continue
        hit.contains_identity = space.contains(identity)
        if not hit.contains_identity:
            hit.alarm = "weakly triangularizable hit misses the identity"
            report.alarms.append(hit.alarm)
            continue
        try:
            flag, _trace = recover_flag(space, assume_weakly_triangularizable=True)
            hit.recovered = True
            hit.chain = flag.chain()
            if n >= 3:
                extraction = extract_structure_maps(space, flag)
                hit.extraction_ok = extraction.all_checks_pass()
            else:
                hit.extraction_ok = None
        except TheoremViolationError as exc:
            hit.alarm = f"recovery alarm: {exc}"
            report.alarms.append(hit.alarm)
