"""Single-pass streaming run: sequences, censuses, checks, rows, checkpoints.

One sieve pass feeds everything. Blocks of consecutive primes are turned into
a-values with the vector recurrence; pair-indexed families, the abs family,
offset families, residue censuses, special-form counters, and every catalog
check are updated per block. The stream is cut exactly at reporting indices
(prime index 2n for checkpoint n) so row emission never needs lookahead.

All per-index quantities are computed independently per block (no float
accumulation across blocks), so output bytes do not depend on block
boundaries, worker count, or checkpoint/resume splits.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from altprime.census import DEFAULT_HIT_CAP, ratio_proxy, rpnt_ratio
from altprime.checkpoint import CheckpointError, load_checkpoint, save_checkpoint
from altprime.conjectures import (
    CONJECTURES,
    SolverError,
    lemma29_ratio,
    pillai_ratio,
    r_k_asymptote_ratio,
    refined_growth_ratio,
    solve_Rk,
)
from altprime.kernels import BACKEND, is_prime_batch
from altprime.primes import (
    DEFAULT_SEGMENT_SIZE,
    DEFAULT_SIEVE_BUDGET,
    PrimeStream,
    nth_prime_upper,
    pi_of_many,
)
from altprime.reports import ConjectureReport, MonitorSeries, TableRow, write_outputs
from altprime.sequences import KIND_A, KIND_ABS, KIND_T, SequenceKind, alt_block, parse_kind

__all__ = [
    "RunConfig",
    "RunConfigError",
    "RunResult",
    "RunState",
    "TABLE_CHECKPOINTS",
    "default_checkpoints",
    "run",
]

# Reporting indices of the reference table; runs keep the ones <= n_max.
TABLE_CHECKPOINTS = (
    10,
    100,
    1000,
    10**4,
    10**5,
    10**6,
    10**7,
    2 * 10**7,
    5 * 10**7,
    7 * 10**7,
    10**8,
    15 * 10**7,
    2 * 10**8,
    3 * 10**8,
    4 * 10**8,
    5 * 10**8,
)

_VIOLATION_EXAMPLES = 10  # keep this many counterexamples verbatim per check

_CHECK_IDS = ("2.10", "2.11", "2.12", "2.14", "2.18-20", "2.18-21", "2.19", "2.20", "2.21", "sun-18")


class RunConfigError(ValueError):
    """Invalid run configuration; message lists every offending field."""


def default_checkpoints(n_max: int) -> tuple[int, ...]:
    cps = [c for c in TABLE_CHECKPOINTS if c <= n_max]
    if not cps or cps[-1] != n_max:
        cps.append(n_max)
    return tuple(cps)


@dataclass(frozen=True)
class RunConfig:
    n_max: int
    kinds: tuple[SequenceKind, ...] = (KIND_A, KIND_T, KIND_ABS)
    shifts: tuple[int, ...] = ()
    offsets: tuple[int, ...] = ()
    moduli: tuple[int, ...] = ()
    checkpoints: tuple[int, ...] | None = None
    workers: int = 1
    segment_size: int = DEFAULT_SEGMENT_SIZE
    sieve_budget: int = DEFAULT_SIEVE_BUDGET
    out_dir: Path | None = None
    checkpoint_every: int | None = None
    resume_from: Path | None = None
    hit_cap: int = DEFAULT_HIT_CAP
    track_specials: bool = True
    stop_after: int | None = None  # stop cleanly at the first save point >= this index

    def validate(self) -> None:
        problems = []
        if self.n_max < 1:
            problems.append(f"n_max must be >= 1, got {self.n_max}")
        if self.workers < 1:
            problems.append(f"workers must be >= 1, got {self.workers}")
        if self.segment_size < 2 or self.segment_size % 2:
            problems.append(f"segment_size must be even and >= 2, got {self.segment_size}")
        if self.hit_cap < 0:
            problems.append(f"hit_cap must be >= 0, got {self.hit_cap}")
        if any(d < 0 for d in self.shifts):
            problems.append(f"shifts must be >= 0, got {self.shifts}")
        if any(k < 1 for k in self.offsets):
            problems.append(f"offsets must be >= 1, got {self.offsets}")
        if self.stop_after is not None and self.stop_after < 1:
            problems.append(f"stop_after must be >= 1, got {self.stop_after}")
        if self.stop_after is not None and self.out_dir is None:
            problems.append("stop_after needs out_dir (stopping writes a checkpoint)")
        if any(d < 2 for d in self.moduli):
            problems.append(f"moduli must be >= 2, got {self.moduli}")
        if self.checkpoint_every is not None and self.checkpoint_every < 1:
            problems.append(f"checkpoint_every must be >= 1, got {self.checkpoint_every}")
        if self.checkpoints is not None:
            if not self.checkpoints:
                problems.append("checkpoints, when given, must be non-empty")
            elif list(self.checkpoints) != sorted(set(self.checkpoints)):
                problems.append(f"checkpoints must be strictly increasing, got {self.checkpoints}")
            elif self.checkpoints[0] < 1 or self.checkpoints[-1] > self.n_max:
                problems.append(f"checkpoints must lie in [1, n_max], got {self.checkpoints}")
        if problems:
            raise RunConfigError("; ".join(problems))

    def effective_checkpoints(self) -> tuple[int, ...]:
        if self.checkpoints is not None:
            return tuple(self.checkpoints)
        return default_checkpoints(self.n_max)

    def effective_kinds(self) -> list[SequenceKind]:
        """Requested kinds plus shift/offset fan-out; the A family is always on
        because rows and the hit checks are defined over it."""
        kinds: list[SequenceKind] = [KIND_A]
        for k in self.kinds:
            if k.label() not in {x.label() for x in kinds}:
                kinds.append(k)
        for d in self.shifts:
            k = SequenceKind("shifted", d)
            if k.label() not in {x.label() for x in kinds}:
                kinds.append(k)
        for off in self.offsets:
            k = SequenceKind("offset", off)
            if k.label() not in {x.label() for x in kinds}:
                kinds.append(k)
        return kinds


def _fresh_census(moduli: list[int]) -> dict[str, Any]:
    return {
        "n": 0,
        "k": 0,
        "last_hit": None,
        "hits": [],
        "hits_truncated": False,
        "dirichlet": {str(d): {"classes": {}, "shared": 0} for d in moduli},
    }


def _fresh_checks() -> dict[str, Any]:
    checks: dict[str, Any] = {}
    for cid in ("2.10", "2.11", "2.12", "2.18-20", "2.19"):
        checks[cid] = {"checked": 0, "violation_count": 0, "violations": []}
    checks["2.14"] = {"checked": 0, "not_applicable": 0, "violation_count": 0, "violations": []}
    checks["2.18-21"] = {"checked": 0, "holds": 0}
    checks["2.20"] = {"checked": 0, "holds": 0}
    checks["2.21"] = {"count": 0, "min": None, "argmin": None, "max": None, "argmax": None}
    checks["sun-18"] = {"checked": 0, "escalations": 0, "violation_count": 0, "violations": []}
    return checks


@dataclass
class RunState:
    """Everything a resumed run needs, JSON-native throughout."""

    n_max: int
    kinds_sig: list[str]
    moduli: list[int]
    i: int = 0  # prime index consumed so far
    a: int = 0  # a_i
    a_prev: int = 0  # a_{i-1}
    p: int = 1  # p_i (1 = "before the first prime")
    censuses: dict[str, Any] = field(default_factory=dict)
    offset_terms: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, Any] = field(default_factory=_fresh_checks)
    specials: dict[str, int] = field(
        default_factory=lambda: {"scanned": 0, "sophie_germain": 0, "twin_neighbor": 0}
    )
    monitors: dict[str, list] = field(default_factory=dict)
    pia_pending: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @classmethod
    def fresh(cls, n_max: int, kinds: list[SequenceKind], moduli: list[int]) -> "RunState":
        state = cls(n_max=n_max, kinds_sig=[k.label() for k in kinds], moduli=list(moduli))
        for k in kinds:
            state.censuses[k.label()] = _fresh_census(state.moduli)
            if k.name == "offset":
                state.offset_terms[k.label()] = {"n": 0, "B": 0}
        state.monitors = {
            "pillai": [],
            "C_n": [],
            "A_over_refined": [],
            "r_k_over_asymptote": [],
            "pi_A_over_n": [],
        }
        for k in kinds:
            state.monitors[f"rpnt:{k.label()}"] = []
        return state

    def to_payload(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "kinds_sig": list(self.kinds_sig),
            "moduli": list(self.moduli),
            "i": self.i,
            "a": self.a,
            "a_prev": self.a_prev,
            "p": self.p,
            "censuses": self.censuses,
            "offset_terms": self.offset_terms,
            "checks": self.checks,
            "specials": self.specials,
            "monitors": self.monitors,
            "pia_pending": self.pia_pending,
            "rows": self.rows,
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> "RunState":
        try:
            return cls(**payload)
        except TypeError as exc:
            raise CheckpointError(f"malformed checkpoint state: {exc}") from exc


@dataclass(frozen=True)
class RunResult:
    rows: list[TableRow]
    reports: list[ConjectureReport]
    monitors: list[MonitorSeries]
    state: RunState
    out_paths: dict[str, Path] | None
    elapsed_s: float
    stopped_early: bool = False

    def counterexample_ids(self) -> list[str]:
        return [r.conjecture_id for r in self.reports if r.status == "counterexample"]


class _Retention:
    """Trailing window of the prime stream with global 1-based indexing."""

    def __init__(self):
        self._chunks: list[tuple[int, np.ndarray]] = []

    def append(self, start_index: int, arr: np.ndarray) -> None:
        if len(arr):
            self._chunks.append((start_index, arr))

    def drop_below(self, index: int) -> None:
        kept = []
        for start, arr in self._chunks:
            if start + len(arr) - 1 < index:
                continue
            if start < index:
                arr = arr[index - start :]
                start = index
            kept.append((start, arr))
        self._chunks = kept

    def get(self, lo: int, hi: int) -> np.ndarray:
        """Primes p_lo..p_hi inclusive; raises if the window has gaps."""
        parts = []
        need = lo
        for start, arr in self._chunks:
            end = start + len(arr) - 1
            if end < need or start > hi:
                continue
            s = max(start, need)
            parts.append(arr[s - start : min(end, hi) - start + 1])
            need = min(end, hi) + 1
            if need > hi:
                break
        if need <= hi:
            raise RuntimeError(f"prime retention window missing indices {need}..{hi}")
        return parts[0] if len(parts) == 1 else np.concatenate(parts)


class _Runner:
    def __init__(self, config: RunConfig):
        config.validate()
        self.config = config
        self.kinds = config.effective_kinds()
        self.pair_kinds = [k for k in self.kinds if k.pair_indexed() and k.name != "offset"]
        self.offset_kinds = [k for k in self.kinds if k.name == "offset"]
        self.has_abs = any(k.name == "abs" for k in self.kinds)
        self.checkpoints = config.effective_checkpoints()
        self.max_offset = max((k.param for k in self.offset_kinds), default=0)
        self.n_stop = 2 * config.n_max + 1 + self.max_offset
        self.moduli = list(config.moduli)
        self.retention = _Retention()
        self.state: RunState | None = None

    # ---------- lifecycle ----------

    def execute(self) -> RunResult:
        t0 = time.monotonic()
        cfg = self.config
        limit = nth_prime_upper(self.n_stop)
        resumed = cfg.resume_from is not None
        if resumed:
            state = self._load_resume()
        else:
            state = RunState.fresh(cfg.n_max, self.kinds, self.moduli)
        self.state = state

        stream = PrimeStream(
            limit,
            start=(state.p + 1 if state.i else 2),
            segment_size=cfg.segment_size,
            workers=cfg.workers,
            budget=cfg.sieve_budget,
        )

        row_cuts = {2 * cp for cp in self.checkpoints}
        save_cuts: set[int] = set()
        if cfg.out_dir is not None:
            save_cuts |= row_cuts
            every = 500_000 if cfg.checkpoint_every is None else cfg.checkpoint_every
            step = 2 * every
            save_cuts |= set(range(step, self.n_stop, step))
        cuts = sorted(c for c in (row_cuts | save_cuts | {self.n_stop}) if c > state.i)
        stop_at = 2 * cfg.stop_after if cfg.stop_after is not None else None

        cut_iter = iter(cuts)
        next_cut = next(cut_iter)
        check_window = resumed and state.i > 0
        stopped = False
        done = state.i >= self.n_stop
        for arr in stream.arrays():
            if done:
                break
            pos = 0
            while pos < len(arr):
                take = min(len(arr) - pos, next_cut - state.i)
                block = arr[pos : pos + take]
                if check_window:
                    self._window_check(block)
                    check_window = False
                self._process_block(block)
                pos += take
                if state.i == next_cut:
                    if state.i in row_cuts:
                        self._emit_row()
                    if state.i in save_cuts:
                        self._save(cfg.out_dir)
                        if stop_at is not None and state.i >= stop_at and state.i < self.n_stop:
                            stopped = True
                            done = True
                            break
                    if state.i >= self.n_stop:
                        done = True
                        break
                    next_cut = next(cut_iter)
            if done:
                break
        if not stopped and state.i != self.n_stop:
            raise RuntimeError(
                f"prime stream ended at index {state.i}, expected {self.n_stop}"
            )
        return self._finalize(t0, resumed, stopped)

    def _load_resume(self) -> RunState:
        cfg = self.config
        state = RunState.from_payload(load_checkpoint(cfg.resume_from))
        want_sig = [k.label() for k in self.kinds]
        problems = []
        if state.n_max != cfg.n_max:
            problems.append(f"n_max {state.n_max} != {cfg.n_max}")
        if state.kinds_sig != want_sig:
            problems.append(f"kinds {state.kinds_sig} != {want_sig}")
        if state.moduli != self.moduli:
            problems.append(f"moduli {state.moduli} != {self.moduli}")
        if state.i % 2:
            problems.append(f"prime index {state.i} is odd")
        if state.i > self.n_stop:
            problems.append(f"prime index {state.i} beyond stop {self.n_stop}")
        if problems:
            raise CheckpointError("checkpoint incompatible with run: " + "; ".join(problems))
        if state.i:
            self._rebuild_retention(state)
        return state

    def _rebuild_retention(self, state: RunState) -> None:
        """Re-sieve [2, p_i] and keep the tail window the run still needs."""
        floor = self._floor_for(state)
        cfg = self.config
        count = 0
        last = 0
        for arr in PrimeStream(
            state.p,
            segment_size=cfg.segment_size,
            workers=cfg.workers,
            budget=cfg.sieve_budget,
        ).arrays():
            if not len(arr):
                continue
            start = count + 1
            count += len(arr)
            last = int(arr[-1])
            if count >= floor:
                cut = max(0, floor - start)
                self.retention.append(start + cut, arr[cut:])
        if count != state.i or last != state.p:
            raise CheckpointError(
                f"re-sieve found {count} primes ending at {last}, "
                f"checkpoint claims i={state.i}, p={state.p}"
            )

    def _window_check(self, block: np.ndarray) -> None:
        state = self.state
        probe = block[: min(16, len(block))]
        if len(probe) and int(probe[0]) <= state.p:
            raise CheckpointError(
                f"resume stream starts at {int(probe[0])}, not past p_i={state.p}"
            )
        try:
            alt_block(state.a, state.i, probe)
        except ArithmeticError as exc:
            raise CheckpointError(f"resume forward-window check failed: {exc}") from exc

    def _floor_for(self, state: RunState) -> int:
        """Lowest prime index the next blocks may still read."""
        floor = max(1, state.i // 2)
        for kind in self.offset_kinds:
            ost = state.offset_terms[kind.label()]
            if ost["n"] >= self.config.n_max:
                continue
            nd = ost["n"]
            need = (1 + kind.param) if nd == 0 else (2 * (nd + 1) + kind.param)
            floor = min(floor, need)
        return floor

    def _save(self, out_dir: Path) -> None:
        save_checkpoint(self.state.to_payload(), Path(out_dir) / "checkpoint.json")

    # ---------- per-block work ----------

    def _process_block(self, P: np.ndarray) -> None:
        state = self.state
        g0 = state.i
        L = len(P)
        a_block = alt_block(state.a, g0, P)
        self.retention.append(g0 + 1, P)

        self._check_sun(a_block, g0)
        self._process_pairs(a_block, P, g0)
        self._process_abs(a_block, g0)
        self._process_offsets(g0 + L)

        state.a_prev = int(a_block[-2]) if L >= 2 else state.a
        state.a = int(a_block[-1])
        state.p = int(P[-1])
        state.i = g0 + L
        self.retention.drop_below(self._floor_for(state))

    def _check_sun(self, a_block: np.ndarray, g0: int) -> None:
        state = self.state
        n_lo = max(10, g0)
        n_hi = min(g0 + len(a_block) - 1, 2 * self.config.n_max)
        if n_hi < n_lo:
            return
        ext = np.concatenate(
            [np.array([state.a_prev, state.a], dtype=np.int64), a_block]
        )  # ext[j] = a_{g0-1+j}
        base = g0 - 1
        n_arr = np.arange(n_lo, n_hi + 1, dtype=np.int64)
        ap_i = ext[n_arr - 1 - base]
        an_i = ext[n_arr + 1 - base]
        ap = ap_i.astype(np.float64)
        an = an_i.astype(np.float64)
        rhs = np.exp((1.0 + 2.0 / (n_arr + 2.0)) * np.log(ap))
        ok = an < rhs
        rec = state.checks["sun-18"]
        rec["checked"] += len(n_arr)
        close = np.abs(rhs - an) / rhs < 1e-9
        for idx in np.flatnonzero(close).tolist():
            rec["escalations"] += 1
            n_v = int(n_arr[idx])
            ok[idx] = int(an_i[idx]) ** (n_v + 2) < int(ap_i[idx]) ** (n_v + 4)
        for idx in np.flatnonzero(~ok).tolist():
            rec["violation_count"] += 1
            if len(rec["violations"]) < _VIOLATION_EXAMPLES:
                rec["violations"].append(
                    [int(n_arr[idx]), int(ap_i[idx]), int(an_i[idx])]
                )

    def _process_pairs(self, a_block: np.ndarray, P: np.ndarray, g0: int) -> None:
        state = self.state
        off0 = g0 + 1
        first_even = 0 if off0 % 2 == 0 else 1
        even_pos = np.arange(first_even, len(P), 2, dtype=np.int64)
        if not len(even_pos):
            return
        m_arr = (off0 + even_pos) // 2
        A_arr = a_block[even_pos]
        p_m = self.retention.get(int(m_arr[0]), int(m_arr[-1])).astype(np.int64)
        self._check_envelopes(m_arr, A_arr, p_m)
        for kind in self.pair_kinds:
            if kind.name == "A":
                delta = 0
            elif kind.name == "T":
                delta = -2
            else:
                delta = 2 * kind.param
            self._census_batch(kind.label(), A_arr + delta, m_arr, is_A=(kind.name == "A"))

    def _check_envelopes(self, m_arr, A_arr, p_m) -> None:
        """Growth envelopes on A_n - p_n and A_n/p_n, asserted from n = 50."""
        state = self.state
        sel = m_arr >= 50
        if not sel.any():
            return
        mm = m_arr[sel].astype(np.float64)
        a_f = A_arr[sel].astype(np.float64)
        p_f = p_m[sel].astype(np.float64)
        diff = a_f - p_f
        lm = np.log(mm)
        llm = np.log(lm)
        nlln = mm * llm
        c_vals = diff / nlln
        lower_ok = diff > nlln / 5.0
        upper_ok = diff < nlln / 4.0
        ratio = a_f / p_f - 1.0
        ratio_lo_ok = ratio > llm / (5.0 * lm)
        ratio_hi_ok = ratio < llm / (4.0 * lm)

        count = int(sel.sum())
        ms = m_arr[sel]

        rec = state.checks["2.18-20"]
        rec["checked"] += count
        self._note_violations(rec, ~lower_ok, ms, A_arr[sel], p_m[sel])
        rec = state.checks["2.19"]
        rec["checked"] += count
        self._note_violations(rec, ~ratio_lo_ok, ms, A_arr[sel], p_m[sel])
        state.checks["2.18-21"]["checked"] += count
        state.checks["2.18-21"]["holds"] += int(upper_ok.sum())
        state.checks["2.20"]["checked"] += count
        state.checks["2.20"]["holds"] += int(ratio_hi_ok.sum())

        cr = state.checks["2.21"]
        cr["count"] += count
        i_min = int(np.argmin(c_vals))
        i_max = int(np.argmax(c_vals))
        if cr["min"] is None or c_vals[i_min] < cr["min"]:
            cr["min"] = float(c_vals[i_min])
            cr["argmin"] = int(ms[i_min])
        if cr["max"] is None or c_vals[i_max] > cr["max"]:
            cr["max"] = float(c_vals[i_max])
            cr["argmax"] = int(ms[i_max])

    @staticmethod
    def _note_violations(rec, bad_mask, ms, As, ps) -> None:
        for idx in np.flatnonzero(bad_mask).tolist():
            rec["violation_count"] += 1
            if len(rec["violations"]) < _VIOLATION_EXAMPLES:
                rec["violations"].append([int(ms[idx]), int(As[idx]), int(ps[idx])])

    def _census_batch(self, label: str, vals, m_arr, is_A: bool = False) -> None:
        state = self.state
        rec = state.censuses[label]
        rec["n"] = int(m_arr[-1])
        mask = is_prime_batch(vals)
        hits_pos = np.flatnonzero(mask)
        if not len(hits_pos):
            return
        ms = m_arr[hits_pos]
        rs = vals[hits_pos]
        ks = rec["k"] + 1 + np.arange(len(ms), dtype=np.int64)
        rec["k"] = int(ks[-1])
        rec["last_hit"] = [int(ks[-1]), int(ms[-1]), int(rs[-1])]
        room = self.config.hit_cap - len(rec["hits"])
        if room < len(ms):
            rec["hits_truncated"] = True
        if room > 0:
            for trio in zip(ks[:room].tolist(), ms[:room].tolist(), rs[:room].tolist()):
                rec["hits"].append(list(trio))
        for d in self.moduli:
            dd = rec["dirichlet"][str(d)]
            for r_v in rs.tolist():
                if math.gcd(r_v, d) == 1:
                    key = str(r_v % d)
                    dd["classes"][key] = dd["classes"].get(key, 0) + 1
                else:
                    dd["shared"] += 1
        if is_A:
            self._check_hits(ks, ms, rs)

    def _check_hits(self, ks, ms, rs) -> None:
        """Per-hit checks on the A family: 2.10, 2.11, 2.12, 2.14."""
        state = self.state
        kf = ks.astype(np.float64)
        mf = ms.astype(np.float64)
        rf = rs.astype(np.float64)
        with np.errstate(divide="ignore", invalid="ignore"):
            lnk = np.log(kf)
            ok10 = np.floor(kf * lnk) + 1.0 <= 2.0 * mf
            rhs = np.where(ks >= 3, 0.5 * kf * lnk * (lnk + np.log(lnk)), 0.0)
            ok11 = rf > rhs
            lratio = rf * np.sqrt(kf * lnk) / (mf * np.sqrt(2.0 * mf) * np.log(mf))

        rec = state.checks["2.10"]
        rec["checked"] += len(ks)
        self._note_violations(rec, ~ok10, ks, ms, rs)

        rec = state.checks["2.11"]
        rec["checked"] += len(ks)
        self._note_violations(rec, ~ok11, ks, ms, rs)

        sel3 = ks >= 3
        rec = state.checks["2.12"]
        rec["checked"] += int(sel3.sum())
        self._note_violations(rec, sel3 & ~ok11, ks, ms, rs)

        sel14 = ks >= 15234
        rec = state.checks["2.14"]
        rec["not_applicable"] += int((~sel14).sum())
        rec["checked"] += int(sel14.sum())
        self._note_violations(rec, sel14 & ~(lratio > 1.0), ks, ms, rs)

    def _process_abs(self, a_block: np.ndarray, g0: int) -> None:
        state = self.state
        if not (self.has_abs or self.config.track_specials):
            return
        upto = min(len(a_block), 2 * self.config.n_max - g0)
        if upto <= 0:
            return
        ab = a_block[:upto]
        idx = np.arange(g0 + 1, g0 + upto + 1, dtype=np.int64)
        if self.has_abs:
            self._census_batch("abs", ab, idx)
        if self.config.track_specials:
            sp = state.specials
            sp["scanned"] += upto
            amask = is_prime_batch(ab)
            prime_pos = np.flatnonzero(amask)
            if len(prime_pos):
                sp["sophie_germain"] += int(is_prime_batch(2 * ab[prime_pos] + 1).sum())
            even_pos = np.flatnonzero((ab & 1) == 0)
            if len(even_pos):
                lo_ok = is_prime_batch(ab[even_pos] - 1)
                cand = even_pos[np.flatnonzero(lo_ok)]
                if len(cand):
                    sp["twin_neighbor"] += int(is_prime_batch(ab[cand] + 1).sum())

    def _process_offsets(self, g1: int) -> None:
        state = self.state
        for kind in self.offset_kinds:
            koff = kind.param
            ost = state.offset_terms[kind.label()]
            n_done = ost["n"]
            n_hi = min((g1 - 1 - koff) // 2, self.config.n_max)
            if n_hi <= n_done:
                continue
            if n_done == 0:
                arr = self.retention.get(1 + koff, 2 * n_hi + 1 + koff).astype(np.int64)
                first = int(arr[0]) - int(arr[1]) + int(arr[2])
                d = arr[4::2] - arr[3::2]  # p_{2n+1+k} - p_{2n+k} for n = 2..n_hi
                terms = np.concatenate(
                    [[first], first + np.cumsum(d)]
                ).astype(np.int64)
                m_arr = np.arange(1, n_hi + 1, dtype=np.int64)
            else:
                start_n = n_done + 1
                arr = self.retention.get(2 * start_n + koff, 2 * n_hi + 1 + koff).astype(np.int64)
                d = arr[1::2] - arr[0::2]
                terms = ost["B"] + np.cumsum(d)
                m_arr = np.arange(start_n, n_hi + 1, dtype=np.int64)
            self._census_batch(kind.label(), terms, m_arr)
            ost["n"] = int(n_hi)
            ost["B"] = int(terms[-1])

    # ---------- reporting ----------

    def _emit_row(self) -> None:
        state = self.state
        c = state.i // 2
        A = state.a
        p2n = state.p
        p_n = int(self.retention.get(c, c)[0])
        rec = state.censuses["A"]
        k = rec["k"]
        last = rec["last_hit"]
        r_k = m = n_minus_m = None
        if last is not None:
            _, m, r_k = last
            n_minus_m = c - m
        R_k = None
        if k >= 3 and r_k is not None:
            try:
                R_k = solve_Rk(k, r_k).R
            except SolverError:
                R_k = None
        A_over = A / (c * math.log(c)) if c >= 2 else None
        C_n = None
        if c >= 3:
            C_n = (A - p_n) / (c * math.log(math.log(c)))
        proxy = ratio_proxy(k, m) if (k >= 1 and m is not None) else None
        lemma = lemma29_ratio(k, m, r_k) if (k >= 2 and m is not None) else None
        pillai = pillai_ratio(2 * c, A, p2n)
        refined = refined_growth_ratio(c, A) if c >= 3 else None

        row = TableRow(
            n=c,
            k=k,
            m=m,
            r_k=r_k,
            n_minus_m=n_minus_m,
            A_n=A,
            p_n=p_n,
            p_2n=p2n,
            R_k=R_k,
            A_over_nlogn=A_over,
            C_n=C_n,
            k_logm_over_2m=proxy,
            lemma29_ratio=lemma,
            pillai=pillai,
            refined_growth=refined,
        )
        state.rows.append(asdict(row))

        mon = state.monitors
        mon["pillai"].append([c, pillai])
        if C_n is not None:
            mon["C_n"].append([c, C_n])
        if refined is not None:
            mon["A_over_refined"].append([c, refined])
        if k >= 2 and r_k is not None:
            mon["r_k_over_asymptote"].append([c, r_k_asymptote_ratio(k, r_k)])
        for label, crec in state.censuses.items():
            if crec["n"] >= 3:
                kind = parse_kind(label)
                mon[f"rpnt:{label}"].append(
                    [c, rpnt_ratio(crec["k"], crec["n"], kind)]
                )
        state.pia_pending.append([c, A])

    def _finalize(self, t0: float, resumed: bool, stopped: bool = False) -> RunResult:
        state = self.state
        cfg = self.config
        if state.pia_pending:
            pis = pi_of_many(
                [a for _, a in state.pia_pending],
                segment_size=cfg.segment_size,
                workers=cfg.workers,
                budget=cfg.sieve_budget,
            )
            state.monitors["pi_A_over_n"] = [
                [c, pi / c] for (c, _), pi in zip(state.pia_pending, pis)
            ]
        rows = [TableRow(**r) for r in state.rows]
        reports = build_reports(state, self.kinds, cfg.n_max)
        monitors = [
            MonitorSeries(name, [(int(n), float(v)) for n, v in pts])
            for name, pts in sorted(state.monitors.items())
        ]
        elapsed = time.monotonic() - t0
        out_paths = None
        if cfg.out_dir is not None:
            meta = {
                "n_max": cfg.n_max,
                "kinds": [k.label() for k in self.kinds],
                "moduli": self.moduli,
                "checkpoints": list(self.checkpoints),
                "workers": cfg.workers,
                "segment_size": cfg.segment_size,
                "sieve_budget": cfg.sieve_budget,
                "checkpoint_every": cfg.checkpoint_every,
                "backend": BACKEND,
                "resumed": resumed,
                "stopped_early": stopped,
                "n_stop": self.n_stop,
                "elapsed_s": round(elapsed, 3),
            }
            out_paths = write_outputs(Path(cfg.out_dir), rows, reports, monitors, meta)
        return RunResult(
            rows=rows,
            reports=reports,
            monitors=monitors,
            state=state,
            out_paths=out_paths,
            elapsed_s=elapsed,
            stopped_early=stopped,
        )


def _check_report(cid: str, rng: tuple[int, int], rec: dict, extra: dict | None = None) -> ConjectureReport:
    details = {k: v for k, v in rec.items()}
    if extra:
        details.update(extra)
    if rec.get("checked", 0) == 0:
        status = "no-data"
    elif rec.get("violation_count", 0) == 0:
        status = "holds"
    else:
        status = "counterexample"
    return ConjectureReport(
        conjecture_id=cid,
        statement=CONJECTURES[cid][1],
        index_range=rng,
        status=status,
        details=details,
    )


def _monitor_report(cid: str, rng: tuple[int, int], details: dict) -> ConjectureReport:
    return ConjectureReport(
        conjecture_id=cid,
        statement=CONJECTURES[cid][1],
        index_range=rng,
        status="monitored",
        details=details,
    )


def _series_tail(points: list, take: int = 3) -> list:
    return [[int(n), float(v)] for n, v in points[-take:]]


def build_reports(state: RunState, kinds: list[SequenceKind], n_max: int) -> list[ConjectureReport]:
    reports: list[ConjectureReport] = []
    mon = state.monitors
    a_rec = state.censuses["A"]
    k_max = a_rec["k"]

    reports.append(
        _monitor_report("2.2", (1, 2 * n_max), {"series": "pillai", "tail": _series_tail(mon["pillai"])})
    )
    reports.append(
        _monitor_report(
            "2.3", (3, n_max), {"series": "A_over_refined", "tail": _series_tail(mon["A_over_refined"])}
        )
    )
    rpnt_tails = {
        label: _series_tail(mon[f"rpnt:{label}"], 1) for label in state.censuses
    }
    reports.append(_monitor_report("2.5", (1, n_max), {"last_by_kind": rpnt_tails}))
    reports.append(
        _monitor_report(
            "2.6", (1, n_max), {"series": "r_k_over_asymptote", "tail": _series_tail(mon["r_k_over_asymptote"])}
        )
    )
    reports.append(
        _monitor_report("2.7", (1, n_max), {"series": "pi_A_over_n", "tail": _series_tail(mon["pi_A_over_n"])})
    )

    reports.append(_check_report("2.10", (1, k_max), state.checks["2.10"]))
    reports.append(_check_report("2.11", (1, k_max), state.checks["2.11"]))
    reports.append(_check_report("2.12", (3, k_max), state.checks["2.12"]))

    sp = state.specials
    reports.append(
        _monitor_report(
            "2.13-sophie",
            (1, sp["scanned"]),
            {"count": sp["sophie_germain"], "scanned": sp["scanned"]},
        )
    )
    reports.append(
        _monitor_report(
            "2.13-twin",
            (1, sp["scanned"]),
            {"count": sp["twin_neighbor"], "scanned": sp["scanned"]},
        )
    )

    reports.append(_check_report("2.14", (15234, max(k_max, 15234)), state.checks["2.14"]))

    shifted = {
        k.label(): {
            "k": state.censuses[k.label()]["k"],
            "n": state.censuses[k.label()]["n"],
            "last_hit": state.censuses[k.label()]["last_hit"],
        }
        for k in kinds
        if k.name == "shifted"
    }
    reports.append(
        _monitor_report("2.15", (1, n_max), {"families": shifted} if shifted else {"families": {}})
    )
    offs = {
        k.label(): {
            "k": state.censuses[k.label()]["k"],
            "n": state.censuses[k.label()]["n"],
            "last_hit": state.censuses[k.label()]["last_hit"],
        }
        for k in kinds
        if k.name == "offset"
    }
    reports.append(_monitor_report("2.16", (1, n_max), {"families": offs} if offs else {"families": {}}))

    residue = {
        label: rec["dirichlet"]
        for label, rec in state.censuses.items()
        if rec["dirichlet"]
    }
    reports.append(_monitor_report("2.17", (1, n_max), {"by_kind": residue}))

    reports.append(_check_report("2.18-20", (50, n_max), state.checks["2.18-20"]))
    r21 = state.checks["2.18-21"]
    reports.append(
        _monitor_report(
            "2.18-21",
            (50, n_max),
            {"checked": r21["checked"], "holds": r21["holds"], "asserted_from": 150_000_000},
        )
    )
    reports.append(_check_report("2.19", (50, n_max), state.checks["2.19"]))
    r20 = state.checks["2.20"]
    reports.append(
        _monitor_report(
            "2.20",
            (50, n_max),
            {"checked": r20["checked"], "holds": r20["holds"], "asserted_from": 150_000_000},
        )
    )

    cr = state.checks["2.21"]
    c_points = mon["C_n"]
    tail_desc = all(
        c_points[i + 1][1] < c_points[i][1] for i in range(len(c_points) - 1)
    ) if len(c_points) >= 2 else None
    reports.append(
        _monitor_report(
            "2.21",
            (50, n_max),
            {
                "min": cr["min"],
                "argmin": cr["argmin"],
                "max": cr["max"],
                "argmax": cr["argmax"],
                "count": cr["count"],
                "checkpoint_series": [[int(n), float(v)] for n, v in c_points],
                "checkpoint_tail_decreasing": tail_desc,
            },
        )
    )

    sun = state.checks["sun-18"]
    reports.append(
        _check_report("sun-18", (10, 2 * n_max), sun)
    )
    return reports


def run(config: RunConfig) -> RunResult:
    """Execute a full verification run."""
    return _Runner(config).execute()
