"""Configuration-theorem checkers over a finite Laguerre plane.

Every checker enumerates (exhaustively, in canonical index order) or
samples (via the counter-based splitmix64 stream) configurations built
CONSTRUCTIVELY: circles and points are chosen step by step so that the
statement's hypotheses hold by construction wherever possible, because
random point tuples almost never satisfy them.  Each checker documents
its choice space; `exhaustive_size` reports its a-priori size so callers
can refuse oversized exhaustive runs.

Checkers are pure functions of (plane, mode): reports are byte-identical
across runs apart from elapsed time.  Every recorded violation can be
re-validated through the scalar incidence operations alone (see
`replay_violation`), independently of the vectorized sweep that found it.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .plane import LaguerrePlane
from .report import MAX_VIOLATIONS, CheckMode, CheckReport, Violation
from .rng import draw_block

__all__ = [
    "CHECK_IDS",
    "CHECKERS",
    "check_C",
    "check_S",
    "check_prop_2_1",
    "check_prop_2_2",
    "check_cor_2_1",
    "check_prop_1_1",
    "check_pi",
    "check_pi_prime",
    "check_thm_2_3",
    "check_miquel",
    "check_bundle",
    "exhaustive_size",
    "replay_violation",
]

_SAMPLE_CHUNK = 1 << 16


def _new(check_id: str, mode: CheckMode) -> tuple[CheckReport, float]:
    return CheckReport(check_id=check_id, mode=mode), time.perf_counter()


def _done(report: CheckReport, t0: float) -> CheckReport:
    report.elapsed_seconds = time.perf_counter() - t0
    return report.finalize()


def _record(report: CheckReport, mask: np.ndarray, make) -> None:
    """Record violations for every set bit of `mask`, capped but counted fully."""
    n = int(mask.sum())
    if not n:
        return
    report.violation_count += n
    room = MAX_VIOLATIONS - len(report.violations)
    if room > 0:
        for i in np.nonzero(mask)[0][:room]:
            report.violations.append(make(int(i)))


def _sample_batches(mode: CheckMode, draws: int):
    """Yield (start_sample, uint64 array of shape (n, draws)) chunks."""
    total = mode.count
    start = 0
    while start < total:
        n = min(_SAMPLE_CHUNK, total - start)
        raw = draw_block(mode.seed, start * draws, n * draws).reshape(n, draws)
        yield start, raw
        start += n


# ---------------------------------------------------------------------------
# tangency-chain checks: the four-chain closure statement, its parallel
# degeneration, and the combined concyclicity corollary
# ---------------------------------------------------------------------------

_CHAIN_DRAWS = 7


def _chain_blocks(plane: LaguerrePlane, mode: CheckMode):
    """Chains K—L—M—N with consecutive circles tangent (corners a,b,c,d').

    Choice space: K, a in K, L tangent to K at a, b in L, M tangent to L
    at b, c in M, N tangent to M at c; the chain closes when |N ∩ K| = 1.
    Yields flat index arrays (K, a, L, b, M, c, N) per block.
    """
    po, members = plane.pencil_others, plane.members
    q, m = plane.q, plane.q - 1
    if mode.is_sample:
        for _, raw in _sample_batches(mode, _CHAIN_DRAWS):
            K = (raw[:, 0] % np.uint64(plane.n_circles)).astype(np.int64)
            sa = (raw[:, 1] % np.uint64(q + 1)).astype(np.int64)
            A = members[K, sa]
            L = po[K, sa, (raw[:, 2] % np.uint64(m)).astype(np.int64)]
            sb = (raw[:, 3] % np.uint64(q + 1)).astype(np.int64)
            B = members[L, sb]
            M = po[L, sb, (raw[:, 4] % np.uint64(m)).astype(np.int64)]
            sc = (raw[:, 5] % np.uint64(q + 1)).astype(np.int64)
            C = members[M, sc]
            N = po[M, sc, (raw[:, 6] % np.uint64(m)).astype(np.int64)]
            yield K, A, L, B, M, C, N
    else:
        for K in range(plane.n_circles):
            A0 = members[K]                    # (q+1,)
            L0 = po[K]                         # (q+1, m)
            B0 = members[L0]                   # (q+1, m, q+1)
            M0 = po[L0]                        # (q+1, m, q+1, m)
            C0 = members[M0]                   # (q+1, m, q+1, m, q+1)
            N0 = po[M0]                        # (q+1, m, q+1, m, q+1, m)
            shape = N0.shape
            yield (
                np.full(shape, K, dtype=np.int64).ravel(),
                np.broadcast_to(A0[:, None, None, None, None, None], shape).ravel(),
                np.broadcast_to(L0[:, :, None, None, None, None], shape).ravel(),
                np.broadcast_to(B0[:, :, :, None, None, None], shape).ravel(),
                np.broadcast_to(M0[:, :, :, :, None, None], shape).ravel(),
                np.broadcast_to(C0[:, :, :, :, :, None], shape).ravel(),
                N0.ravel(),
            )


def _run_chain(plane: LaguerrePlane, mode: CheckMode, variant: str) -> CheckReport:
    report, t0 = _new({"S": "S", "P22": "Prop22", "C21": "Cor21"}[variant], mode)
    gen, mem, T, TP, T3 = (plane.gen_of, plane.mem, plane.pair_count,
                           plane.tangent_point, plane.triple_circle)
    for K, A, L, B, M, C, N in _chain_blocks(plane, mode):
        report.configurations += len(K)
        closed = T[N, K] == 1
        D = np.where(closed, TP[N, K], -1)
        Dc = np.maximum(D, 0)
        par_ac = gen[A] == gen[C]
        par_bd = gen[B] == gen[Dc]

        if variant == "S":
            hyp = closed & ~par_ac
            degenerate = (B == A) | (B == C) | (B == D) | (D == A) | (D == C)
            cid = T3[A, B, C]
            on4 = (cid >= 0) & mem[np.maximum(cid, 0), Dc]
            ok = degenerate | (~par_bd & on4)
        elif variant == "P22":
            hyp = closed & par_ac
            ok = par_bd
        else:  # C21: assert the ordered quadruple (a,c,b,d) is concyclic
            hyp = closed
            branch2 = par_ac & par_bd & (A != B)
            co = (B == A) | (B == C) | (B == D) | (D == A) | (D == C)
            cid = T3[A, B, C]
            proper4 = ~par_ac & ~par_bd & (cid >= 0) & mem[np.maximum(cid, 0), Dc]
            proper_set3 = ~(par_ac & (A != C))          # b or d coincides: only (a,c) can obstruct
            proper_ac = ~(par_bd & (B != D))            # a == c alone: only (b,d) can obstruct
            proper = np.where(co, proper_set3, np.where(A == C, proper_ac, proper4))
            ok = proper | branch2

        report.hypothesis_hits += int(hyp.sum())
        bad = hyp & ~ok
        _record(report, bad, lambda i: Violation(
            variant.lower() + "-chain",
            points=(int(A[i]), int(B[i]), int(C[i]), int(D[i])),
            circles=(int(K[i]), int(L[i]), int(M[i]), int(N[i]))))
    return _done(report, t0)


def check_S(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Closed tangency chains with non-parallel opposite corners a,c span a circle."""
    return _run_chain(plane, mode, "S")


def check_prop_2_2(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Closed tangency chains with a parallel to c force b parallel to d."""
    return _run_chain(plane, mode, "P22")


def check_cor_2_1(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Every closed tangency chain has (a,c,b,d) concyclic in the generalized sense."""
    return _run_chain(plane, mode, "C21")


# ---------------------------------------------------------------------------
# the unique-tangent-intersection axiom
# ---------------------------------------------------------------------------

def check_C(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """For circles K,L and p in K minus L: exactly one member of the
    tangent pencil at (p,K) meets L in exactly one point."""
    report, t0 = _new("C", mode)
    q, n_c = plane.q, plane.n_circles
    T, mem, members, po = plane.pair_count, plane.mem, plane.members, plane.pencil_others

    if mode.is_sample:
        for _, raw in _sample_batches(mode, 3):
            K = (raw[:, 0] % np.uint64(n_c)).astype(np.int64)
            L = (raw[:, 1] % np.uint64(n_c)).astype(np.int64)
            sp = (raw[:, 2] % np.uint64(q + 1)).astype(np.int64)
            P = members[K, sp]
            report.configurations += len(K)
            hyp = (K != L) & ~mem[L, P]
            pen = po[K, sp, :]                                   # (n, q-1)
            counts = (T[pen, L[:, None]] == 1).sum(axis=1)
            counts += (T[K, L] == 1).astype(counts.dtype)        # K itself is in its pencils
            report.hypothesis_hits += int(hyp.sum())
            bad = hyp & (counts != 1)
            _record(report, bad, lambda i: Violation(
                "tangent-count", points=(int(P[i]),),
                circles=(int(K[i]), int(L[i])), data=(("count", int(counts[i])),)))
    else:
        all_c = np.arange(n_c)
        for K in range(n_c):
            pen = np.concatenate([po[K], np.full((q + 1, 1), K)], axis=1)  # (q+1, q)
            counts = (T[pen] == 1).sum(axis=1)                    # (q+1, n_c)
            onL = mem[:, members[K]].T                            # (q+1, n_c)
            hyp = (~onL) & (all_c != K)[None, :]
            report.configurations += int(hyp.size)
            report.hypothesis_hits += int(hyp.sum())
            bad = hyp & (counts != 1)
            if bad.any():
                pts = members[K]
                _record(report, bad.ravel(), lambda i: Violation(
                    "tangent-count", points=(int(pts[i // n_c]),),
                    circles=(K, int(i % n_c)),
                    data=(("count", int(counts[i // n_c, i % n_c])),)))
    return _done(report, t0)


# ---------------------------------------------------------------------------
# pairwise-tangent triples, and the characteristic-2 tangency transfer
# ---------------------------------------------------------------------------

def check_prop_2_1(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Three mutually tangent circles touch at one common point."""
    report, t0 = _new("Prop21", mode)
    T, TP, po, members = (plane.pair_count, plane.tangent_point,
                          plane.pencil_others, plane.members)
    q, n_c = plane.q, plane.n_circles

    if mode.is_sample:
        for _, raw in _sample_batches(mode, 5):
            K = (raw[:, 0] % np.uint64(n_c)).astype(np.int64)
            L = po[K, (raw[:, 1] % np.uint64(q + 1)).astype(np.int64),
                   (raw[:, 2] % np.uint64(q - 1)).astype(np.int64)]
            M = po[K, (raw[:, 3] % np.uint64(q + 1)).astype(np.int64),
                   (raw[:, 4] % np.uint64(q - 1)).astype(np.int64)]
            report.configurations += len(K)
            hyp = (T[L, M] == 1) & (L != M)
            same = (TP[K, L] == TP[K, M]) & (TP[K, L] == TP[L, M])
            report.hypothesis_hits += int(hyp.sum())
            _record(report, hyp & ~same, lambda i: Violation(
                "tangent-trio",
                points=(int(TP[K[i], L[i]]), int(TP[K[i], M[i]]), int(TP[L[i], M[i]])),
                circles=(int(K[i]), int(L[i]), int(M[i]))))
    else:
        # unordered triples, counted once via K < L < M
        for K in range(n_c):
            part = np.nonzero(T[K] == 1)[0]
            part = part[part > K]
            if len(part) < 2:
                continue
            sub = T[np.ix_(part, part)] == 1
            iu, ju = np.triu_indices(len(part), k=1)
            report.configurations += len(iu)
            hyp = sub[iu, ju]
            L, M = part[iu], part[ju]
            same = (TP[K, L] == TP[K, M]) & (TP[K, L] == TP[L, M])
            report.hypothesis_hits += int(hyp.sum())
            _record(report, hyp & ~same, lambda i: Violation(
                "tangent-trio",
                points=(int(TP[K, L[i]]), int(TP[K, M[i]]), int(TP[L[i], M[i]])),
                circles=(K, int(L[i]), int(M[i]))))
    return _done(report, t0)


def check_prop_1_1(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Characteristic 2 only: two circles through a common point and both
    tangent to a third circle are tangent to each other."""
    report, t0 = _new("Prop11", mode)
    if plane.q % 2 == 1:
        report.verdict = "NotApplicable"
        report.notes = ("odd order: statement restricted to characteristic 2",)
        return _done(report, t0)

    T, po = plane.pair_count, plane.pencil_others
    q, n_c = plane.q, plane.n_circles
    if mode.is_sample:
        for _, raw in _sample_batches(mode, 5):
            M = (raw[:, 0] % np.uint64(n_c)).astype(np.int64)
            K = po[M, (raw[:, 1] % np.uint64(q + 1)).astype(np.int64),
                   (raw[:, 2] % np.uint64(q - 1)).astype(np.int64)]
            L = po[M, (raw[:, 3] % np.uint64(q + 1)).astype(np.int64),
                   (raw[:, 4] % np.uint64(q - 1)).astype(np.int64)]
            report.configurations += len(M)
            inter = T[K, L]
            hyp = (K != L) & (inter >= 1)
            report.hypothesis_hits += int(hyp.sum())
            _record(report, hyp & (inter != 1), lambda i: Violation(
                "tangency-transfer", circles=(int(M[i]), int(K[i]), int(L[i])),
                data=(("common_points", int(inter[i])),)))
    else:
        # unordered pairs {K, L} per base circle M; the statement is
        # symmetric in K and L, so each pair is examined once
        for M in range(n_c):
            part = np.nonzero(T[M] == 1)[0]
            if len(part) < 2:
                continue
            iu, ju = np.triu_indices(len(part), k=1)
            K, L = part[iu], part[ju]
            inter = T[K, L]
            report.configurations += len(iu)
            hyp = inter >= 1
            report.hypothesis_hits += int(hyp.sum())
            _record(report, hyp & (inter != 1), lambda i: Violation(
                "tangency-transfer", circles=(M, int(K[i]), int(L[i])),
                data=(("common_points", int(inter[i])),)))
    return _done(report, t0)


# ---------------------------------------------------------------------------
# the symmetry configuration family on (a, b, c, x)
# ---------------------------------------------------------------------------

def _pi_blocks(plane: LaguerrePlane, mode: CheckMode):
    """Mutually non-parallel (a,b,c,x) with x off the circle through a,b,c.

    Yields (a, b, c, x, C1) flat arrays of hypothesis configurations plus
    the number of raw candidates examined for the block.
    """
    gen, mem, T3 = plane.gen_of, plane.mem, plane.triple_circle
    pts = np.arange(plane.n_points)
    if mode.is_sample:
        for _, raw in _sample_batches(mode, 4):
            a = (raw[:, 0] % np.uint64(plane.n_points)).astype(np.int64)
            b = (raw[:, 1] % np.uint64(plane.n_points)).astype(np.int64)
            c = (raw[:, 2] % np.uint64(plane.n_points)).astype(np.int64)
            x = (raw[:, 3] % np.uint64(plane.n_points)).astype(np.int64)
            ok = ((gen[a] != gen[b]) & (gen[a] != gen[c]) & (gen[a] != gen[x])
                  & (gen[b] != gen[c]) & (gen[b] != gen[x]) & (gen[c] != gen[x]))
            C1 = np.where(ok, T3[a, b, c], 0)
            ok &= ~mem[C1, x]
            n_raw = len(a)
            idx = np.nonzero(ok)[0]
            yield a[idx], b[idx], c[idx], x[idx], C1[idx], n_raw
    else:
        for a in range(plane.n_points):
            ga = int(gen[a])
            b_cand = pts[gen != ga]
            for b in b_cand:
                gb = int(gen[b])
                cx = pts[(gen != ga) & (gen != gb)]
                C = np.repeat(cx, len(cx))
                X = np.tile(cx, len(cx))
                ok = gen[C] != gen[X]
                C1 = np.where(ok, T3[a, b, C], 0)
                ok &= ~mem[C1, X]
                n_raw = len(C)
                idx = np.nonzero(ok)[0]
                yield (np.full(len(idx), a), np.full(len(idx), b),
                       C[idx], X[idx], C1[idx], n_raw)


def _run_pi_family(plane: LaguerrePlane, mode: CheckMode, variant: str) -> CheckReport:
    names = {"PI": "Pi", "PIP": "PiPrime", "T23": "Thm23"}
    report, t0 = _new(names[variant], mode)
    gen, mem, T, TP, W = (plane.gen_of, plane.mem, plane.pair_count,
                          plane.tangent_point, plane.pair_sum)
    T3, TCT, CPG, slot = (plane.triple_circle, plane.tangent_through,
                          plane.gen_point, plane.slot_of)
    for a, b, c, x, C1, n_raw in _pi_blocks(plane, mode):
        report.configurations += n_raw
        if not len(a):
            continue
        Cabx = T3[a, b, x]
        p = CPG[Cabx, gen[c]]
        Cacx = T3[a, c, x]
        qpt = CPG[Cacx, gen[b]]
        K = TCT[C1, slot[C1, a], x]

        if variant == "PI":
            skip = (gen[p] == gen[qpt]) | (gen[p] == gen[x]) | (gen[qpt] == gen[x])
            C2 = np.where(skip, 0, T3[p, qpt, x])
            ok = (T[K, C2] == 1) & (TP[K, C2] == x)
        elif variant == "PIP":
            skip = mem[K, qpt]
            L = np.where(skip, 0, TCT[K, slot[K, x], qpt])
            two = T[L, Cabx] == 2
            other = np.where(two, W[L, Cabx] - x, 0)
            ok = two & (gen[other] == gen[c])
        else:  # T23
            skip = qpt == b
            Cqpx = T3[qpt, p, x]
            N = np.where(skip, 0, TCT[Cqpx, slot[Cqpx, p], b])
            ok = (T[N, C1] == 1) & (TP[N, C1] == b)

        report.skipped += int(skip.sum())
        eval_mask = ~skip
        report.hypothesis_hits += int(eval_mask.sum())
        bad = eval_mask & ~ok
        _record(report, bad, lambda i: Violation(
            names[variant].lower() + "-config",
            points=(int(a[i]), int(b[i]), int(c[i]), int(x[i])),
            circles=(int(C1[i]),)))
    return _done(report, t0)


def check_pi(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Artzy symmetry configuration: the circle through x tangent to
    (a,b,c)° at a meets (p,q,x)° exactly in x."""
    return _run_pi_family(plane, mode, "PI")


def check_pi_prime(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Reformulated symmetry configuration: L through q tangent to K at x
    meets (a,b,x)° in exactly x and the point of it parallel to c."""
    return _run_pi_family(plane, mode, "PIP")


def check_thm_2_3(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """The circle tangent to (q,p,x)° at p through b is tangent to (a,b,c)° at b."""
    return _run_pi_family(plane, mode, "T23")


# ---------------------------------------------------------------------------
# the eight-point closure statements
# ---------------------------------------------------------------------------

def _ord4(plane: LaguerrePlane) -> np.ndarray:
    return np.array(list(itertools.permutations(range(plane.q + 1), 4)), dtype=np.int64)


def _miquel_eval(plane, A, Cq, B, D, C2, se, sh, sg, sf, report):
    """Shared evaluation for the Miquel generator given choice arrays.

    A,Cq,B,D are the four base points on a common circle; C2 runs over the
    pencil through (A,B); e,h lie on C2, g on (A,D,h)°, f on (B,Cq,e)°.
    The ordered quadruple names follow the statement: hypothesis quadruples
    (a,c,b,d), (a,e,b,h), (a,g,d,h), (b,f,c,e), (c,g,d,f); conclusion
    (e,g,f,h).
    """
    gen, mem, members, T3 = plane.gen_of, plane.mem, plane.members, plane.triple_circle
    E = members[C2, se]
    H = members[C2, sh]
    base_ok = (E != A) & (E != B) & (H != A) & (H != B) & (se != sh)

    dh_ok = gen[D] != gen[H]
    ce_ok = gen[Cq] != gen[E]
    feasible = base_ok & dh_ok & ce_ok
    skip = base_ok & ~(dh_ok & ce_ok)
    report.skipped += int(skip.sum())

    C3 = np.where(feasible, T3[A, D, H], 0)
    G = members[C3, sg]
    C4 = np.where(feasible, T3[B, Cq, E], 0)
    F = members[C4, sf]

    distinct = feasible
    for u, v in ((E, Cq), (E, D), (H, Cq), (H, D),
                 (G, A), (G, B), (G, Cq), (G, D), (G, E), (G, H),
                 (F, A), (F, B), (F, Cq), (F, D), (F, E), (F, H), (F, G)):
        distinct = distinct & (u != v)

    # hypothesis quadruple on pairs {c,d},{g,f}: one circle, or a split into
    # two parallel pairs (either matching names a degenerate plane section)
    pcg, pdf = gen[Cq] == gen[G], gen[D] == gen[F]
    pcf, pdg = gen[Cq] == gen[F], gen[D] == gen[G]
    t_cgd = T3[Cq, G, D]
    proper5 = (~pcg & ~pdf & ~pcf & ~pdg & (gen[G] != gen[F])
               & (t_cgd >= 0) & mem[np.maximum(t_cgd, 0), F])
    hyp = distinct & (proper5 | (pcg & pdf) | (pcf & pdg))
    report.hypothesis_hits += int(hyp.sum())

    # conclusion on pairs {e,f},{g,h}
    peg, pfh = gen[E] == gen[G], gen[F] == gen[H]
    peh, pfg = gen[E] == gen[H], gen[F] == gen[G]
    t_egf = T3[E, G, F]
    proper = (~peg & ~pfh & ~peh & ~pfg & (gen[G] != gen[F]) & (t_egf >= 0)
              & mem[np.maximum(t_egf, 0), H])
    ok = proper | (peg & pfh) | (peh & pfg)
    _record(report, hyp & ~ok, lambda i: Violation(
        "miquel-closure",
        points=(int(A[i]), int(B[i]), int(Cq[i]), int(D[i]),
                int(E[i]), int(F[i]), int(G[i]), int(H[i])),
        circles=(int(C2[i]), int(C3[i]), int(C4[i]))))


def check_miquel(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Miquel closure: five concyclic quadruples of eight distinct points
    force the sixth."""
    report, t0 = _new("Miquel", mode)
    members, VP = plane.members, plane.vertex_pencils
    q, n_c = plane.q, plane.n_circles

    if mode.is_sample:
        for _, raw in _sample_batches(mode, 10):
            C1 = (raw[:, 0] % np.uint64(n_c)).astype(np.int64)
            s = [(raw[:, j] % np.uint64(q + 1)).astype(np.int64) for j in range(1, 5)]
            report.configurations += len(C1)
            base = ((s[0] != s[1]) & (s[0] != s[2]) & (s[0] != s[3])
                    & (s[1] != s[2]) & (s[1] != s[3]) & (s[2] != s[3]))
            A, Cq, B, D = (members[C1, s[0]], members[C1, s[1]],
                           members[C1, s[2]], members[C1, s[3]])
            C2 = VP[A, B, (raw[:, 5] % np.uint64(q)).astype(np.int64)]
            se = (raw[:, 6] % np.uint64(q + 1)).astype(np.int64)
            sh = (raw[:, 7] % np.uint64(q + 1)).astype(np.int64)
            sg = (raw[:, 8] % np.uint64(q + 1)).astype(np.int64)
            sf = (raw[:, 9] % np.uint64(q + 1)).astype(np.int64)
            idx = np.nonzero(base)[0]
            _miquel_eval(plane, A[idx], Cq[idx], B[idx], D[idx], C2[idx],
                         se[idx], sh[idx], sg[idx], sf[idx], report)
    else:
        ords = _ord4(plane)
        if not len(ords):
            return _done(report, t0)
        sgrid = np.arange(q + 1)
        for C1 in range(n_c):
            pts = members[C1]
            A0, Cq0, B0, D0 = (pts[ords[:, 0]], pts[ords[:, 1]],
                               pts[ords[:, 2]], pts[ords[:, 3]])
            for c2sel in range(q):
                C2_0 = VP[A0, B0, c2sel]
                # axes: (ordering, se, sh, sg, sf)
                shape = (len(ords), q + 1, q + 1, q + 1, q + 1)
                report.configurations += int(np.prod(shape))
                A = np.broadcast_to(A0[:, None, None, None, None], shape).ravel()
                Cq = np.broadcast_to(Cq0[:, None, None, None, None], shape).ravel()
                B = np.broadcast_to(B0[:, None, None, None, None], shape).ravel()
                D = np.broadcast_to(D0[:, None, None, None, None], shape).ravel()
                C2 = np.broadcast_to(C2_0[:, None, None, None, None], shape).ravel()
                se = np.broadcast_to(sgrid[None, :, None, None, None], shape).ravel()
                sh = np.broadcast_to(sgrid[None, None, :, None, None], shape).ravel()
                sg = np.broadcast_to(sgrid[None, None, None, :, None], shape).ravel()
                sf = np.broadcast_to(sgrid[None, None, None, None, :], shape).ravel()
                _miquel_eval(plane, A, Cq, B, D, C2, se, sh, sg, sf, report)
    return _done(report, t0)


def _six_point_collapse(plane, p1, p2, p3, p4, p5, p6):
    """Six points on one circle, or spread over at most two generators.

    Either collapse puts three of the four point-pairs on a single
    (possibly degenerate) section, which voids the closure statement:
    a third pair can then link two of the pencils without constraining
    the fourth at all.
    """
    gen, mem, T3 = plane.gen_of, plane.mem, plane.triple_circle
    t = T3[p1, p2, p3]
    tc = np.maximum(t, 0)
    on_circle = (t >= 0) & mem[tc, p4] & mem[tc, p5] & mem[tc, p6]
    gens = np.stack([gen[p] for p in (p1, p2, p3, p4, p5, p6)])
    lo, hi = gens.min(axis=0), gens.max(axis=0)
    two_gens = np.ones(len(p1), dtype=bool)
    for row in gens:
        two_gens &= (row == lo) | (row == hi)
    return on_circle | two_gens


def _bundle_eval(plane, A, Cq, B, D, C5, se, sf, C3, sg, sh, report):
    """Shared evaluation for the bundle generator given choice arrays.

    Circles realize three pair-hypotheses properly: C1 holds the base
    quadruple (a,c,b,d), C5 through a,b holds e,f (hypothesis (a,e,b,f)),
    C3 through e,f holds g,h (hypothesis (e,g,f,h)).  The point-relating
    hypotheses (c,e,d,f) and (g,a,h,b) are filters admitting both the
    proper and the parallel-pair form.  Conclusion: (c,g,d,h).

    General position is required and counted under `skipped`: no three of
    the pairs {a,b},{c,d},{e,f},{g,h} may collapse onto a single section
    (see `_six_point_collapse`); without that restriction the statement
    is false already on classical planes.
    """
    gen, mem, members, T3 = plane.gen_of, plane.mem, plane.members, plane.triple_circle
    E = members[C5, se]
    F = members[C5, sf]
    G = members[C3, sg]
    H = members[C3, sh]

    distinct = (se != sf) & (sg != sh)
    for u, v in ((E, A), (E, B), (F, A), (F, B),
                 (E, Cq), (E, D), (F, Cq), (F, D),
                 (G, A), (G, B), (G, Cq), (G, D), (G, E), (G, F),
                 (H, A), (H, B), (H, Cq), (H, D), (H, E), (H, F)):
        distinct = distinct & (u != v)

    # hypothesis on pairs {c,d},{e,f}: one circle, or a split into two
    # parallel pairs (either matching names a degenerate plane section)
    pce, pdf = gen[Cq] == gen[E], gen[D] == gen[F]
    pcf, pde = gen[Cq] == gen[F], gen[D] == gen[E]
    t_ced = T3[Cq, E, D]
    h2 = ((~pce & ~pdf & ~pcf & ~pde
           & (t_ced >= 0) & mem[np.maximum(t_ced, 0), F])
          | (pce & pdf) | (pcf & pde))
    # hypothesis on pairs {g,h},{a,b}
    pga, phb = gen[G] == gen[A], gen[H] == gen[B]
    pgb, pha = gen[G] == gen[B], gen[H] == gen[A]
    t_abg = T3[A, B, G]
    h4 = ((~pga & ~phb & ~pgb & ~pha
           & (t_abg >= 0) & mem[np.maximum(t_abg, 0), H])
          | (pga & phb) | (pgb & pha))

    hyp0 = distinct & h2 & h4
    collapsed = hyp0 & (
        _six_point_collapse(plane, A, B, Cq, D, E, F)
        | _six_point_collapse(plane, A, B, Cq, D, G, H)
        | _six_point_collapse(plane, A, B, E, F, G, H)
        | _six_point_collapse(plane, Cq, D, E, F, G, H))
    report.skipped += int(collapsed.sum())
    hyp = hyp0 & ~collapsed
    report.hypothesis_hits += int(hyp.sum())

    # conclusion on pairs {c,d},{g,h}
    pcg, pdh = gen[Cq] == gen[G], gen[D] == gen[H]
    pch, pdg = gen[Cq] == gen[H], gen[D] == gen[G]
    t_cgd = T3[Cq, G, D]
    proper = (~pcg & ~pdh & ~pch & ~pdg
              & (t_cgd >= 0) & mem[np.maximum(t_cgd, 0), H])
    ok = proper | (pcg & pdh) | (pch & pdg)
    _record(report, hyp & ~ok, lambda i: Violation(
        "bundle-closure",
        points=(int(A[i]), int(B[i]), int(Cq[i]), int(D[i]),
                int(E[i]), int(F[i]), int(G[i]), int(H[i])),
        circles=(int(C5[i]), int(C3[i]))))


def check_bundle(plane: LaguerrePlane, mode: CheckMode) -> CheckReport:
    """Bundle closure: five of the six pencil quadruples force the sixth."""
    report, t0 = _new("Bundle", mode)
    members, VP = plane.members, plane.vertex_pencils
    q, n_c = plane.q, plane.n_circles

    if mode.is_sample:
        for _, raw in _sample_batches(mode, 11):
            C1 = (raw[:, 0] % np.uint64(n_c)).astype(np.int64)
            s = [(raw[:, j] % np.uint64(q + 1)).astype(np.int64) for j in range(1, 5)]
            base = ((s[0] != s[1]) & (s[0] != s[2]) & (s[0] != s[3])
                    & (s[1] != s[2]) & (s[1] != s[3]) & (s[2] != s[3]))
            report.configurations += len(C1)
            A, Cq, B, D = (members[C1, s[0]], members[C1, s[1]],
                           members[C1, s[2]], members[C1, s[3]])
            C5 = VP[A, B, (raw[:, 5] % np.uint64(q)).astype(np.int64)]
            se = (raw[:, 6] % np.uint64(q + 1)).astype(np.int64)
            sf = (raw[:, 7] % np.uint64(q + 1)).astype(np.int64)
            E = members[C5, se]
            F = members[C5, sf]
            C3 = VP[E, F, (raw[:, 8] % np.uint64(q)).astype(np.int64)]
            sg = (raw[:, 9] % np.uint64(q + 1)).astype(np.int64)
            sh = (raw[:, 10] % np.uint64(q + 1)).astype(np.int64)
            idx = np.nonzero(base & (se != sf) & (C3 >= 0))[0]
            _bundle_eval(plane, A[idx], Cq[idx], B[idx], D[idx], C5[idx],
                         se[idx], sf[idx], C3[idx], sg[idx], sh[idx], report)
    else:
        ords = _ord4(plane)
        if not len(ords):
            return _done(report, t0)
        # axes per (C1, C5sel) block: (ordering, se, sf, C3sel, sg, sh)
        shape = (len(ords), q + 1, q + 1, q, q + 1, q + 1)
        gr = np.ogrid[tuple(slice(0, s) for s in shape)]
        se = np.broadcast_to(gr[1], shape).ravel()
        sf = np.broadcast_to(gr[2], shape).ravel()
        c3sel = np.broadcast_to(gr[3], shape).ravel()
        sg = np.broadcast_to(gr[4], shape).ravel()
        sh = np.broadcast_to(gr[5], shape).ravel()
        keep = np.nonzero(se != sf)[0]
        se, sf, c3sel, sg, sh = se[keep], sf[keep], c3sel[keep], sg[keep], sh[keep]
        for C1 in range(n_c):
            pts = members[C1]
            A0, Cq0, B0, D0 = (pts[ords[:, 0]], pts[ords[:, 1]],
                               pts[ords[:, 2]], pts[ords[:, 3]])
            for c5sel in range(q):
                report.configurations += int(np.prod(shape))
                A = np.broadcast_to(A0[gr[0]], shape).ravel()[keep]
                Cq = np.broadcast_to(Cq0[gr[0]], shape).ravel()[keep]
                B = np.broadcast_to(B0[gr[0]], shape).ravel()[keep]
                D = np.broadcast_to(D0[gr[0]], shape).ravel()[keep]
                C5 = VP[A, B, c5sel]
                E = members[C5, se]
                F = members[C5, sf]
                C3 = VP[E, F, c3sel]
                _bundle_eval(plane, A, Cq, B, D, C5, se, sf, C3, sg, sh, report)
    return _done(report, t0)


# ---------------------------------------------------------------------------
# registry, sizes, replay
# ---------------------------------------------------------------------------

def _size_chain(plane):
    q = plane.q
    return plane.n_circles * ((q + 1) * (q - 1)) ** 3


def _size_c(plane):
    return plane.n_circles * plane.n_circles * (plane.q + 1)


def _size_pi(plane):
    n, q = plane.n_points, plane.q
    return n * (n - q) * (n - 2 * q) * (n - 3 * q)


def _size_trio(plane):
    return plane.n_circles * (plane.q**2 - 1) ** 2 // 2


def _size_miquel(plane):
    # choice space of the exhaustive generator: C1, ordered base quadruple,
    # pencil selector, and four raw member slots (invalid ones filtered)
    q = plane.q
    perms = (q + 1) * q * (q - 1) * (q - 2)
    return plane.n_circles * perms * q * (q + 1) ** 4


def _size_bundle(plane):
    q = plane.q
    perms = (q + 1) * q * (q - 1) * (q - 2)
    return plane.n_circles * perms * (q * (q + 1) * (q + 1)) ** 2


@dataclass(frozen=True)
class CheckerSpec:
    check_id: str
    run: callable
    size: callable


CHECKERS = {
    "C": CheckerSpec("C", check_C, _size_c),
    "S": CheckerSpec("S", check_S, _size_chain),
    "Prop21": CheckerSpec("Prop21", check_prop_2_1, _size_trio),
    "Prop22": CheckerSpec("Prop22", check_prop_2_2, _size_chain),
    "Cor21": CheckerSpec("Cor21", check_cor_2_1, _size_chain),
    "Prop11": CheckerSpec("Prop11", check_prop_1_1, _size_trio),
    "Pi": CheckerSpec("Pi", check_pi, _size_pi),
    "PiPrime": CheckerSpec("PiPrime", check_pi_prime, _size_pi),
    "Thm23": CheckerSpec("Thm23", check_thm_2_3, _size_pi),
    "Miquel": CheckerSpec("Miquel", check_miquel, _size_miquel),
    "Bundle": CheckerSpec("Bundle", check_bundle, _size_bundle),
}

CHECK_IDS = tuple(CHECKERS)


def exhaustive_size(plane: LaguerrePlane, check_id: str) -> int:
    """A-priori size of the checker's exhaustive choice space."""
    return CHECKERS[check_id].size(plane)


# -- scalar witness replay -------------------------------------------------

def _replay_chain(plane, v, variant):
    a, b, c, d = v.points
    K, L, M, N = v.circles
    for pair, pt in (((K, L), a), ((L, M), b), ((M, N), c), ((N, K), d)):
        t = plane.tangency(pair[0], pair[1])
        if not (t.kind == "tangent" and t.points == (pt,)):
            return False
    if variant == "S":
        return (not plane.parallel(a, c)) and not plane.properly_concyclic((a, b, c, d))
    if variant == "P22":
        return plane.parallel(a, c) and not plane.parallel(b, d)
    return not plane.concyclic(a, c, b, d)


def _replay_c(plane, v):
    (p,), (K, L) = v.points, v.circles
    if plane.mem[L, p] or K == L:
        return False
    count = sum(1 for m in plane.tangent_pencil(p, K)
                if plane.tangency(m, L).kind == "tangent")
    return count != 1 and count == dict(v.data)["count"]


def _replay_trio(plane, v):
    K, L, M = v.circles
    touches = [plane.tangency(K, L), plane.tangency(K, M), plane.tangency(L, M)]
    if any(t.kind != "tangent" for t in touches):
        return False
    return len({t.points[0] for t in touches}) > 1


def _replay_transfer(plane, v):
    M, K, L = v.circles
    if plane.tangency(M, K).kind != "tangent" or plane.tangency(M, L).kind != "tangent":
        return False
    t = plane.tangency(K, L)
    return t.kind == "secant"


def _replay_pi_family(plane, v, variant):
    a, b, c, x = v.points
    C1 = plane.circle_through(a, b, c)
    if plane.mem[C1.id, x]:
        return False
    p = plane.parallel_point(c, plane.circle_through(a, b, x))
    qpt = plane.parallel_point(b, plane.circle_through(a, c, x))
    K = plane.tangent_circle(a, C1, x)
    if variant == "PI":
        C2 = plane.circle_through(p, qpt, x)
        t = plane.tangency(K, C2)
        return not (t.kind == "tangent" and t.points == (x,))
    if variant == "PIP":
        if plane.mem[K.id, qpt]:
            return False
        L = plane.tangent_circle(x, K, qpt)
        t = plane.tangency(L, plane.circle_through(a, b, x))
        if t.kind != "secant":
            return True
        others = [pt for pt in t.points if pt != x]
        return len(others) != 1 or not plane.parallel(others[0], c)
    if qpt == b:
        return False
    Cqpx = plane.circle_through(qpt, p, x)
    N = plane.tangent_circle(p, Cqpx, b)
    t = plane.tangency(N, C1)
    return not (t.kind == "tangent" and t.points == (b,))


def _replay_miquel(plane, v):
    # quadruples read set-wise: a circle or a degenerate section (two
    # parallel pairs in either matching)
    a, b, c, d, e, f, g, h = v.points
    hyps = [(a, c, b, d), (a, e, b, h), (a, g, d, h), (b, f, c, e), (c, g, d, f)]
    if len({a, b, c, d, e, f, g, h}) != 8:
        return False
    if not all(plane.concyclic_some_order(*quad) for quad in hyps):
        return False
    return not plane.concyclic_some_order(e, g, f, h)


def _replay_bundle(plane, v):
    a, b, c, d, e, f, g, h = v.points
    hyps = [(a, c, b, d), (c, e, d, f), (e, g, f, h), (g, a, h, b), (a, e, b, f)]
    if len({a, b, c, d, e, f, g, h}) != 8:
        return False
    if not all(plane.concyclic_some_order(*quad) for quad in hyps):
        return False
    pairs = [(a, b), (c, d), (e, f), (g, h)]
    for i, j, k in itertools.combinations(range(4), 3):
        six = pairs[i] + pairs[j] + pairs[k]
        if plane.properly_concyclic(six) or len({int(plane.gen_of[p]) for p in six}) <= 2:
            return False
    return not plane.concyclic_some_order(c, g, d, h)


def replay_violation(plane: LaguerrePlane, check_id: str, v: Violation) -> bool:
    """Re-validate a recorded violation through scalar incidence operations.

    Returns True when the witness still demonstrates a violation on the
    given plane.
    """
    if check_id == "C":
        return _replay_c(plane, v)
    if check_id == "S":
        return _replay_chain(plane, v, "S")
    if check_id == "Prop22":
        return _replay_chain(plane, v, "P22")
    if check_id == "Cor21":
        return _replay_chain(plane, v, "C21")
    if check_id == "Prop21":
        return _replay_trio(plane, v)
    if check_id == "Prop11":
        return _replay_transfer(plane, v)
    if check_id == "Pi":
        return _replay_pi_family(plane, v, "PI")
    if check_id == "PiPrime":
        return _replay_pi_family(plane, v, "PIP")
    if check_id == "Thm23":
        return _replay_pi_family(plane, v, "T23")
    if check_id == "Miquel":
        return _replay_miquel(plane, v)
    if check_id == "Bundle":
        return _replay_bundle(plane, v)
    if check_id == "Axioms":
        fresh = plane.validate_axioms()
        return any(w.kind == v.kind for w in fresh.violations) or not fresh.holds
    raise ValueError(f"no replay known for check {check_id!r}")
