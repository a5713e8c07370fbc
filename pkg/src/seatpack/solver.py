"""Exact maximization of seated persons over a conflict graph.

The model is a set packing / maximum-weight independent set: pick pairwise
compatible placements maximizing total seats, one binary variable per
placement and one pairwise constraint per conflict edge.

Two engines sit behind ``solve_exact``:

* ``milp`` (default): the HiGHS branch-and-cut solver via scipy. The dense
  no-obstacle instances need strong LP-based bounds to close; see the
  measurements in the project notes.
* ``bnb``: a self-contained branch and bound on bitsets whose upper bound
  is a greedy weighted clique cover of the remaining candidates. Branching
  is restricted to vertices outside the cover prefix that fits within the
  incumbent gap (any improving solution must use one of them). Fine for
  graphs up to a few hundred vertices; kept as an engine both as a
  dependency-free fallback and as a cross-check of the MILP path.

Both engines honor the time limit and report the best incumbent plus a
valid dual (upper) bound on termination.
"""

from __future__ import annotations

import enum
import sys
import time
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.optimize import Bounds, LinearConstraint, milp

from .conflict import ConflictGraph


class SolveStatus(enum.Enum):
    OPTIMAL = "Optimal"
    TIME_LIMIT = "TimeLimit"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SolveResult:
    selected: tuple[int, ...]  # chosen placement ids, ascending
    primal: int  # seats of the best solution found
    dual: float  # best proven upper bound
    gap: float  # (dual - primal) / primal, 0 when primal == 0
    status: SolveStatus
    elapsed: float  # wall-clock seconds


def optimality_gap(primal: float, dual: float) -> float:
    """Relative gap (dual - primal) / primal."""
    if primal <= 0:
        raise ValueError("gap undefined for non-positive primal value")
    if dual < primal - 1e-9:
        raise ValueError(f"dual bound {dual} below primal {primal}")
    return (dual - primal) / primal


def _greedy_incumbent(graph: ConflictGraph) -> list[int]:
    """Fallback incumbent: scan vertices by weight desc, degree asc, id asc."""
    order = sorted(
        range(graph.vertex_count),
        key=lambda u: (-graph.weights[u], graph.degrees[u], u),
    )
    adj = graph.adjacency
    picked_mask = 0
    picked = []
    for u in order:
        if adj[u] & picked_mask == 0:
            picked_mask |= 1 << u
            picked.append(u)
    return picked


def _log(verbose: bool, elapsed: float, incumbent: int, bound: float) -> None:
    if verbose:
        gap = (bound - incumbent) / incumbent if incumbent > 0 else 0.0
        print(f"{elapsed:.1f} {incumbent} {bound:g} {gap:.4f}", file=sys.stderr)


def solve_exact(graph: ConflictGraph, time_limit: float, *,
                initial=None, engine: str = "auto",
                verbose: bool = False) -> SolveResult:
    """Solve to optimality within the time limit.

    ``initial`` may carry a feasible set of placement ids (typically the
    corner heuristic) used as the starting incumbent. On completion the
    status is Optimal and the primal value is the true maximum; on timeout
    the best incumbent and the best proven bound are returned. The selected
    set is one optimal set, not a canonical one.
    """
    if time_limit <= 0:
        raise ValueError(f"time limit must be positive, got {time_limit}")
    if engine == "auto":
        engine = "milp"
    if engine not in ("milp", "bnb"):
        raise ValueError(f"unknown engine '{engine}'")

    start = time.monotonic()
    incumbent = list(initial) if initial is not None else _greedy_incumbent(graph)
    if not graph.is_independent(incumbent):
        raise ValueError("initial solution is not conflict-free")
    inc_value = graph.weight_of(incumbent)

    if graph.vertex_count == 0:
        return SolveResult((), 0, 0.0, 0.0, SolveStatus.OPTIMAL,
                           time.monotonic() - start)

    if engine == "milp":
        selected, primal, dual, status = _solve_milp(
            graph, time_limit, incumbent, inc_value)
    else:
        selected, primal, dual, status = _solve_bnb(
            graph, time_limit, incumbent, inc_value, verbose, start)

    elapsed = time.monotonic() - start
    if not graph.is_independent(selected):
        raise RuntimeError("solver returned a conflicting selection")
    if graph.weight_of(selected) != primal:
        raise RuntimeError("solver primal value does not match its selection")
    gap = optimality_gap(primal, dual) if primal > 0 else 0.0
    _log(verbose, elapsed, primal, dual)
    return SolveResult(tuple(sorted(selected)), primal, float(dual), gap,
                       status, elapsed)


def _solve_milp(graph, time_limit, incumbent, inc_value):
    n = graph.vertex_count
    weights = np.asarray(graph.weights, dtype=float)
    constraints = []
    m = len(graph.edges)
    if m:
        rows = np.repeat(np.arange(m), 2)
        cols = np.fromiter((u for e in graph.edges for u in e), dtype=np.int64,
                           count=2 * m)
        a = sp.csc_array((np.ones(2 * m), (rows, cols)), shape=(m, n))
        constraints.append(LinearConstraint(a, ub=np.ones(m)))
    res = milp(
        c=-weights,
        constraints=constraints,
        integrality=np.ones(n),
        bounds=Bounds(0, 1),
        options={"time_limit": float(time_limit)},
    )
    if res.status == 0:
        selected = [int(u) for u in np.flatnonzero(res.x > 0.5)]
        primal = sum(graph.weights[u] for u in selected)
        if primal < inc_value:
            raise RuntimeError(
                f"MILP optimum {primal} below feasible incumbent {inc_value}")
        return selected, primal, float(primal), SolveStatus.OPTIMAL
    if res.status == 1:
        if res.x is not None:
            selected = [int(u) for u in np.flatnonzero(res.x > 0.5)]
            primal = sum(graph.weights[u] for u in selected)
        else:
            selected, primal = incumbent, inc_value
        if primal < inc_value:
            selected, primal = incumbent, inc_value
        dual_raw = getattr(res, "mip_dual_bound", None)
        dual = -float(dual_raw) if dual_raw is not None else float(sum(graph.weights))
        # seat weights are integral, so the bound can be floored
        dual = max(float(primal), float(int(dual + 1e-6)))
        return selected, primal, dual, SolveStatus.TIME_LIMIT
    raise RuntimeError(f"MILP engine failed with status {res.status}: {res.message}")


def clique_cover_bound(adjacency: list[int], weights, mask: int) -> int:
    """Greedy weighted clique cover of the vertices in ``mask``.

    Vertices are consumed in ascending index order (callers pre-sort by
    weight desc, degree desc); each clique is grown greedily around its
    first uncovered vertex, whose weight the clique contributes. The sum
    over cliques bounds any independent set inside ``mask`` from above.
    """
    bound = 0
    rem = mask
    while rem:
        lsb = rem & -rem
        u = lsb.bit_length() - 1
        bound += weights[u]
        common = adjacency[u] & rem
        rem ^= lsb
        while common:
            vl = common & -common
            rem ^= vl
            common = (common ^ vl) & adjacency[vl.bit_length() - 1]
    return bound


def _solve_bnb(graph, time_limit, incumbent, inc_value, verbose, start):
    n = graph.vertex_count
    # Renumber so that "weight desc, degree desc, id asc" becomes plain index
    # order: the lowest set bit of a candidate mask is then the next greedy
    # vertex for both the cover and the branching set.
    perm = sorted(range(n), key=lambda u: (-graph.weights[u], -graph.degrees[u], u))
    pos = [0] * n
    for new, old in enumerate(perm):
        pos[old] = new
    w = [graph.weights[perm[k]] for k in range(n)]
    adj = [0] * n
    for u, v in graph.edges:
        nu, nv = pos[u], pos[v]
        adj[nu] |= 1 << nv
        adj[nv] |= 1 << nu
    closed = [adj[k] | (1 << k) for k in range(n)]

    best_val = inc_value
    best_set = 0
    for u in incumbent:
        best_set |= 1 << pos[u]

    total_weight = sum(w)
    stack = [((1 << n) - 1, 0, 0, total_weight)]
    timed_out = False
    nodes = 0
    last_log = start
    while stack:
        nodes += 1
        if nodes & 255 == 0:
            now = time.monotonic()
            if now - start > time_limit:
                timed_out = True
                break
            if verbose and now - last_log >= 5.0:
                dual_now = max([best_val] + [t for (_, _, _, t) in stack])
                _log(True, now - start, best_val, dual_now)
                last_log = now
        mask, cw, cs, _ = stack.pop()
        # take isolated candidates outright
        m = mask
        while m:
            lsb = m & -m
            u = lsb.bit_length() - 1
            if adj[u] & mask:
                m ^= lsb
                continue
            cw += w[u]
            cs |= lsb
            mask ^= lsb
            m ^= lsb
        if cw > best_val:
            best_val, best_set = cw, cs
        if not mask:
            continue
        need = best_val - cw
        # greedy clique cover; vertices in cliques past the prefix that fits
        # within `need` are the only ones an improving solution can use
        rem = mask
        bound = 0
        branch = 0
        over = False
        while rem:
            lsb = rem & -rem
            u = lsb.bit_length() - 1
            members = lsb
            common = adj[u] & rem
            rem ^= lsb
            while common:
                vl = common & -common
                members |= vl
                rem ^= vl
                common = (common ^ vl) & adj[vl.bit_length() - 1]
            bound += w[u]
            if over or bound > need:
                over = True
                branch |= members
        if bound <= need:
            continue
        node_total = cw + bound
        children = []
        ex = 0
        bm = branch
        while bm:
            lsb = bm & -bm
            u = lsb.bit_length() - 1
            bm ^= lsb
            children.append(((mask & ~ex) & ~closed[u], cw + w[u],
                             cs | lsb, node_total))
            ex |= lsb
        stack.extend(reversed(children))

    if timed_out:
        dual = float(max([best_val] + [t for (_, _, _, t) in stack]))
        status = SolveStatus.TIME_LIMIT
    else:
        dual = float(best_val)
        status = SolveStatus.OPTIMAL
    selected = [perm[k] for k in range(n) if (best_set >> k) & 1]
    return selected, best_val, dual, status


def export_lp(graph: ConflictGraph) -> str:
    """CPLEX-LP text of the model: binary z<u> per placement, one pairwise
    constraint per conflict edge, deterministic ordering."""
    lines = ["Maximize"]
    terms = [f"{graph.weights[u]} z{u + 1}" for u in range(graph.vertex_count)]
    if not terms:
        lines.append(" obj: 0")
    else:
        for i in range(0, len(terms), 8):
            chunk = " + ".join(terms[i:i + 8])
            lines.append(f" obj: {chunk}" if i == 0 else f"      + {chunk}")
    lines.append("Subject To")
    for k, (u, v) in enumerate(graph.edges, start=1):
        lines.append(f" c{k}: z{u + 1} + z{v + 1} <= 1")
    lines.append("Binary")
    for u in range(graph.vertex_count):
        lines.append(f" z{u + 1}")
    lines.append("End")
    return "\n".join(lines) + "\n"
