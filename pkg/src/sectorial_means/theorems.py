"""Catalog of verifiable statements about the implemented means.

Every entry draws hypothesis-respecting random samples (module ``rand``),
evaluates both sides of its identity or inequality, and reports worst-case
Loewner margins and equality residuals.  Checks are deterministic functions
of (catalog, config): sample j of check c is seeded from
(master_seed, c, j), so execution order and parallelism never change a
report.

Margins are normalized by scale = max(1, norms of the compared sides); a
check passes when every margin stays above -(atol + rtol) and every
equality residual stays below EQ_TOL.  Checks flagged ``required=False``
are exploratory: they run only when selected explicitly and never gate a
campaign.
"""

import csv
import hashlib
import io
import json
import math
import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import maps, means
from .errors import ConfigError, UnknownCheck
from .linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    herm_part,
    inv,
    loewner_cmp,
    shifted_sector_angle,
    spectral_norm,
)
from .rand import check_rng, rand_pd, rand_sectorial, rand_unitary, rand_weights

__all__ = [
    "EQ_TOL",
    "Hypothesis",
    "CheckSpec",
    "CheckReport",
    "CampaignConfig",
    "CampaignResult",
    "list_checks",
    "get_check",
    "run_check",
    "run_all",
    "default_master_seed",
]

EQ_TOL = 1e-8

PD_H, PD_K = 0.5, 2.0
MU_NONNEG = (0.0, 0.1, 1.0, 10.0)
MU_POS = (0.1, 1.0, 10.0)
MU_SIGNED = (-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0)
MU_EXTENDED = (-math.inf,) + MU_SIGNED + (math.inf,)
LAMBDA_GRID = (0.1, 0.5, 0.9)
ALPHA_GRID = (math.pi / 12, math.pi / 6, math.pi / 3)
T_GRID = (0.25, 0.5, 0.75)
SCALE_GRID = (0.3, 2.7)
LIMIT_MU_GRID = (10.0, 1e2, 1e3, 1e4)

# The shifted sector angle arctan(tan(a) / (1 + mu)) bounds the sector of
# A + mu I only when Re A <= I.  Checks that rely on it scale their sector
# draws by SECT_NORM_SCALE, putting the Hermitian-part spectra in
# [SECT_NORM_H, SECT_NORM_K] with the upper bound attained.
SECT_NORM_SCALE = 0.5
SECT_NORM_H, SECT_NORM_K = 0.25, 1.0

ENV_SEED = "SECTORIAL_MEANS_SEED"


def default_master_seed():
    raw = os.environ.get(ENV_SEED, "")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{ENV_SEED} must be an integer, got {raw!r}") from exc
    return 1729


@dataclass(frozen=True)
class Hypothesis:
    """Ensemble template a check draws from; asserted against the catalog."""

    ensemble: str  # "pd" | "sectorial" | "both" | "fixed"
    h: float = PD_H
    k: float = PD_K
    alphas: tuple = ()
    m_values: tuple = (2, 3)
    mu_grid: tuple = ()
    lambda_grid: tuple = ()


@dataclass(frozen=True)
class CheckSpec:
    id: str
    statement: str
    kind: str  # "equality" | "inequality" | "counterexample" | "limit"
    hypothesis: Hypothesis
    required: bool = True
    fn: object = None

    def to_dict(self):
        return {
            "id": self.id,
            "statement": self.statement,
            "kind": self.kind,
            "required": self.required,
            "ensemble": self.hypothesis.ensemble,
        }


@dataclass
class CheckReport:
    id: str
    kind: str
    required: bool
    samples_run: int
    worst_margin: float | None
    worst_residual: float | None
    failures: list
    passed: bool
    wall_time: float
    details: dict = field(default_factory=dict)

    def to_dict(self):
        # wall_time is intentionally omitted: persisted reports must be
        # byte-identical across reruns with the same seed.
        return {
            "id": self.id,
            "kind": self.kind,
            "required": self.required,
            "samples_run": self.samples_run,
            "worst_margin": self.worst_margin,
            "worst_residual": self.worst_residual,
            "failures": self.failures,
            "passed": self.passed,
            "details": self.details,
        }


class SampleCtx:
    """Per-sample toolbox handed to a check function.

    Draw helpers record every generated matrix so failing samples can be
    digested; ``margin``/``residual`` accumulate the quantities that decide
    the verdict.
    """

    def __init__(self, rng, dim, m, alpha, index, tol):
        self.rng = rng
        self.dim = dim
        self.m = m
        self.alpha = alpha
        self.index = index
        self.tol = tol
        self.margins = []
        self.residuals = []
        self.flags = []
        self.notes = []
        self.details = {}
        self._draws = []

    # draw helpers ----------------------------------------------------
    def _track(self, a):
        self._draws.append(np.ascontiguousarray(a))
        return a

    def pd(self, h=PD_H, k=PD_K, dim=None):
        return self._track(rand_pd(dim or self.dim, h, k, self.rng))

    def pd_tuple(self, m=None, h=PD_H, k=PD_K):
        return [self.pd(h, k) for _ in range(m or self.m)]

    def sect(self, alpha=None, dim=None, scale=1.0):
        cert = rand_sectorial(dim or self.dim, self.alpha if alpha is None else alpha, self.rng)
        return self._track(scale * cert.matrix)

    def sect_tuple(self, m=None, scale=1.0):
        return [self.sect(scale=scale) for _ in range(m or self.m)]

    def weights(self, m=None):
        return rand_weights(m or self.m, self.rng)

    def unitary(self):
        return self._track(rand_unitary(self.dim, self.rng))

    def pulm(self, compress=False):
        kind = maps.PULM_KINDS[self.index % len(maps.PULM_KINDS)]
        if compress:
            kind = "isometry"
        return maps.random_pulm(self.dim, kind, self.rng, compress=compress)

    # verdict accumulators ---------------------------------------------
    def margin(self, x, y):
        """Normalized margin of X <= Y; negative beyond tolerance fails."""
        v = loewner_cmp(x, y, self.tol)
        scale = max(1.0, spectral_norm(x), spectral_norm(y))
        if v.skew_norm > self.tol.herm_tol * scale:
            self.fail(f"difference not Hermitian: skew {v.skew_norm:.3e}")
        value = v.margin / scale
        self.margins.append(value)
        return value

    def residual(self, x, y):
        """Normalized distance between X and Y; above EQ_TOL fails."""
        value = spectral_norm(x - y) / max(1.0, spectral_norm(x), spectral_norm(y))
        self.residuals.append(value)
        return value

    def expect(self, condition, note=""):
        self.flags.append(bool(condition))
        if not condition and note:
            self.notes.append(note)

    def fail(self, note):
        self.flags.append(False)
        self.notes.append(note)

    def digest(self):
        blob = b"".join(a.tobytes() for a in self._draws)
        return hashlib.blake2b(blob, digest_size=6).hexdigest()

    def sample_passed(self, order_tol):
        margins_ok = all(m >= -order_tol for m in self.margins)
        residuals_ok = all(r <= EQ_TOL for r in self.residuals)
        return margins_ok and residuals_ok and all(self.flags)


_REGISTRY = {}


def _check(check_id, statement, kind, hyp, required=True):
    def deco(fn):
        if check_id in _REGISTRY:
            raise ValueError(f"duplicate check id {check_id!r}")
        _REGISTRY[check_id] = CheckSpec(
            id=check_id,
            statement=statement,
            kind=kind,
            hypothesis=hyp,
            required=required,
            fn=fn,
        )
        return fn

    return deco


def _eye(n):
    return np.eye(n, dtype=np.complex128)


def _both_pairs(ctx):
    """One PD pair and one sector-certified pair."""
    yield ctx.pd(), ctx.pd()
    yield ctx.sect(), ctx.sect()


def _both_tuples(ctx):
    yield ctx.pd_tuple()
    yield ctx.sect_tuple()


# ---------------------------------------------------------------------------
# geometric-mean identities
# ---------------------------------------------------------------------------

_HYP_ACC = Hypothesis(ensemble="both", alphas=ALPHA_GRID, lambda_grid=LAMBDA_GRID)
_HYP_PD = Hypothesis(ensemble="pd", lambda_grid=LAMBDA_GRID)
_HYP_SECT = Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID)


@_check(
    "GM.idempotent",
    "A #_w A = A for accretive A and every weight w",
    "equality",
    _HYP_ACC,
)
def _gm_idempotent(ctx):
    for a, _ in _both_pairs(ctx):
        for lam in LAMBDA_GRID:
            ctx.residual(means.geometric_mean(a, a, lam), a)


@_check(
    "GM.commute",
    "A # B = B # A at equal weights for accretive A, B",
    "equality",
    _HYP_ACC,
)
def _gm_commute(ctx):
    for a, b in _both_pairs(ctx):
        ctx.residual(means.geometric_mean(a, b, 0.5), means.geometric_mean(b, a, 0.5))


@_check(
    "GM.inverse",
    "(A #_w B)^{-1} = A^{-1} #_w B^{-1} for accretive A, B",
    "equality",
    _HYP_ACC,
)
def _gm_inverse(ctx):
    for a, b in _both_pairs(ctx):
        for lam in LAMBDA_GRID:
            ctx.residual(
                inv(means.geometric_mean(a, b, lam)),
                means.geometric_mean(inv(a), inv(b), lam),
            )


@_check(
    "GM.homog",
    "(sA) #_w (tB) = s^{1-w} t^w (A #_w B) for positive scalars s, t",
    "equality",
    _HYP_ACC,
)
def _gm_homog(ctx):
    s, t = ctx.rng.uniform(0.2, 3.0, size=2)
    for a, b in _both_pairs(ctx):
        for lam in LAMBDA_GRID:
            ctx.residual(
                means.geometric_mean(s * a, t * b, lam),
                s ** (1.0 - lam) * t**lam * means.geometric_mean(a, b, lam),
            )


@_check(
    "GM.monotone",
    "A <= C and B <= D imply A #_w B <= C #_w D on PD matrices",
    "inequality",
    _HYP_PD,
)
def _gm_monotone(ctx):
    a, b = ctx.pd(), ctx.pd()
    c = a + ctx.pd(0.2, 1.0)
    d = b + ctx.pd(0.2, 1.0)
    for lam in LAMBDA_GRID:
        ctx.margin(means.geometric_mean(a, b, lam), means.geometric_mean(c, d, lam))


@_check(
    "GM.AH-identity",
    "(A + B) # (A^{-1} + B^{-1})^{-1} = A # B for PD and for accretive A, B",
    "equality",
    _HYP_ACC,
)
def _gm_ah_identity(ctx):
    for a, b in _both_pairs(ctx):
        lhs = means.geometric_mean(a + b, inv(inv(a) + inv(b)), 0.5)
        ctx.residual(lhs, means.geometric_mean(a, b, 0.5))


# ---------------------------------------------------------------------------
# positive-unital-map inequalities
# ---------------------------------------------------------------------------

_HYP_PD_MAP = Hypothesis(ensemble="pd", lambda_grid=LAMBDA_GRID)


@_check(
    "Ando",
    "Phi(A s B) <= Phi(A) s Phi(B) for means s in {#_w, weighted harmonic}",
    "inequality",
    _HYP_PD_MAP,
)
def _ando(ctx):
    a, b = ctx.pd(), ctx.pd()
    phi = ctx.pulm()
    for lam in LAMBDA_GRID:
        ctx.margin(
            phi(means.geometric_mean(a, b, lam)),
            means.geometric_mean(phi(a), phi(b), lam),
        )
        w = (1.0 - lam, lam)
        ctx.margin(
            phi(means.harmonic_mean([a, b], w)),
            means.harmonic_mean([phi(a), phi(b)], w),
        )


@_check(
    "Choi",
    "Phi(A)^{-1} <= Phi(A^{-1}) for PD A and positive unital Phi",
    "inequality",
    _HYP_PD_MAP,
)
def _choi(ctx):
    a = ctx.pd()
    phi = ctx.pulm()
    ctx.margin(inv(phi(a)), phi(inv(a)))


@_check(
    "Kantorovich",
    "Phi(A^{-1}) <= ((k+h)^2 / 4kh) Phi(A)^{-1} when h <= A <= k",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K),
)
def _kantorovich(ctx):
    a = ctx.pd()
    phi = ctx.pulm()
    const = (PD_K + PD_H) ** 2 / (4.0 * PD_K * PD_H)
    ctx.margin(phi(inv(a)), const * inv(phi(a)))


@_check(
    "AG.reverse",
    "weighted arithmetic <= ((h nabla_t k)/(h #_t k)) (A #_w B) with t = min(w, 1-w)",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K, lambda_grid=LAMBDA_GRID),
)
def _ag_reverse(ctx):
    a, b = ctx.pd(), ctx.pd()
    for lam in LAMBDA_GRID:
        t = min(lam, 1.0 - lam)
        const = ((1.0 - t) * PD_H + t * PD_K) / (PD_H ** (1.0 - t) * PD_K**t)
        ctx.margin(
            means.arithmetic_mean([a, b], (1.0 - lam, lam)),
            const * means.geometric_mean(a, b, lam),
        )


@_check(
    "KA.subadd",
    "(A + C) s (B + D) >= A s B + C s D for means s in {#_w, weighted harmonic}",
    "inequality",
    _HYP_PD_MAP,
)
def _ka_subadd(ctx):
    a, b, c, d = (ctx.pd() for _ in range(4))
    for lam in LAMBDA_GRID:
        ctx.margin(
            means.geometric_mean(a, b, lam) + means.geometric_mean(c, d, lam),
            means.geometric_mean(a + c, b + d, lam),
        )
        w = (1.0 - lam, lam)
        ctx.margin(
            means.harmonic_mean([a, b], w) + means.harmonic_mean([c, d], w),
            means.harmonic_mean([a + c, b + d], w),
        )


@_check(
    "KA.resolventJ",
    "J_{A/mu} #_w J_{B/mu} <= J_{(A #_w B)/mu} with J_X = (X + I)^{-1}, mu > 0",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_POS, lambda_grid=LAMBDA_GRID),
)
def _ka_resolvent_j(ctx):
    a, b = ctx.pd(), ctx.pd()
    eye = _eye(ctx.dim)
    for mu in MU_POS:
        ja = inv(a / mu + eye)
        jb = inv(b / mu + eye)
        for lam in LAMBDA_GRID:
            jg = inv(means.geometric_mean(a, b, lam) / mu + eye)
            ctx.margin(means.geometric_mean(ja, jb, lam), jg)


# ---------------------------------------------------------------------------
# sector-angle inequalities for real parts
# ---------------------------------------------------------------------------


@_check(
    "Sect.invBounds",
    "Re(A^{-1}) <= (Re A)^{-1} <= sec^2(a) Re(A^{-1}) for sector angle a, "
    "with the summed corollary for tuples",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, m_values=(3,)),
)
def _sect_inv_bounds(ctx):
    sec2 = 1.0 / math.cos(ctx.alpha) ** 2
    items = ctx.sect_tuple(3)
    for a in items:
        re_inv = herm_part(inv(a))
        inv_re = inv(herm_part(a))
        ctx.margin(re_inv, inv_re)
        ctx.margin(inv_re, sec2 * re_inv)
    cos2 = math.cos(ctx.alpha) ** 2
    total_inv = sum(inv(a) for a in items)
    sum_re_inv = sum(herm_part(inv(a)) for a in items)
    sum_inv_re = sum(inv(herm_part(a)) for a in items)
    ctx.margin(cos2 * inv(sum_re_inv), herm_part(inv(total_inv)))
    ctx.margin(cos2 * inv(sum_inv_re), cos2 * inv(sum_re_inv))


@_check(
    "Sect.GMlower",
    "Re A # Re B <= Re(A # B) for accretive A, B at equal weights",
    "inequality",
    _HYP_SECT,
)
def _sect_gm_lower(ctx):
    a, b = ctx.sect(), ctx.sect()
    ctx.margin(
        means.geometric_mean(herm_part(a), herm_part(b), 0.5),
        herm_part(means.geometric_mean(a, b, 0.5)),
    )


@_check(
    "Sect.GMlower.weighted",
    "Re A #_w Re B <= Re(A #_w B): weighted variant of the equal-weight bound",
    "inequality",
    _HYP_SECT,
    required=False,
)
def _sect_gm_lower_weighted(ctx):
    a, b = ctx.sect(), ctx.sect()
    for lam in LAMBDA_GRID:
        ctx.margin(
            means.geometric_mean(herm_part(a), herm_part(b), lam),
            herm_part(means.geometric_mean(a, b, lam)),
        )


@_check(
    "Sect.GMupper",
    "Re(A # B) <= sec^2(a) (Re A # Re B) for sector angle a",
    "inequality",
    _HYP_SECT,
)
def _sect_gm_upper(ctx):
    a, b = ctx.sect(), ctx.sect()
    sec2 = 1.0 / math.cos(ctx.alpha) ** 2
    ctx.margin(
        herm_part(means.geometric_mean(a, b, 0.5)),
        sec2 * means.geometric_mean(herm_part(a), herm_part(b), 0.5),
    )


# ---------------------------------------------------------------------------
# quadratic characterizations
# ---------------------------------------------------------------------------


@_check(
    "Riccati",
    "A # B is the PD solution of X A^{-1} X = B on PD pairs",
    "equality",
    _HYP_PD,
)
def _riccati(ctx):
    a, b = ctx.pd(), ctx.pd()
    x = means.drury_solve(a, b)
    ctx.residuals.append(means.drury_residual(a, b, x))
    ctx.expect(
        float(np.linalg.eigvalsh(herm_part(x))[0]) > 0.0, "solution not PD"
    )


@_check(
    "Drury",
    "A # B is the accretive solution of X A^{-1} X = B on accretive pairs",
    "equality",
    _HYP_SECT,
)
def _drury(ctx):
    a, b = ctx.sect(), ctx.sect()
    x = means.drury_solve(a, b)
    ctx.residuals.append(means.drury_residual(a, b, x))
    ctx.expect(
        float(np.linalg.eigvalsh(herm_part(x))[0]) > 0.0, "solution not accretive"
    )


# ---------------------------------------------------------------------------
# resolvent-average properties
# ---------------------------------------------------------------------------

_HYP_R_BOTH = Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_NONNEG)
_HYP_R_PD = Hypothesis(ensemble="pd", mu_grid=MU_NONNEG)


@_check(
    "R.idempotency",
    "resolvent average of (A, ..., A) is A for every shift",
    "equality",
    _HYP_R_BOTH,
)
def _r_idempotency(ctx):
    w = ctx.weights()
    for kind in ("pd", "sect"):
        a = ctx.pd() if kind == "pd" else ctx.sect()
        for mu in MU_NONNEG + (math.inf,):
            ctx.residual(means.resolvent_average([a] * ctx.m, w, mu), a)


@_check(
    "R.selfdual",
    "inverse of the shift-mu resolvent average equals the shift-1/mu average "
    "of the inverses",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_POS),
)
def _r_selfdual(ctx):
    w = ctx.weights()
    for items in _both_tuples(ctx):
        inv_items = [inv(a) for a in items]
        for mu in MU_POS:
            ctx.residual(
                inv(means.resolvent_average(items, w, mu)),
                means.resolvent_average(inv_items, w, 1.0 / mu),
            )


@_check(
    "R.unitary",
    "U* R(A_1..A_m) U = R(U* A_1 U, ..., U* A_m U)",
    "equality",
    _HYP_R_BOTH,
)
def _r_unitary(ctx):
    w = ctx.weights()
    u = ctx.unitary()
    uh = u.conj().T
    for items in _both_tuples(ctx):
        rotated = [uh @ a @ u for a in items]
        for mu in MU_NONNEG:
            ctx.residual(
                uh @ means.resolvent_average(items, w, mu) @ u,
                means.resolvent_average(rotated, w, mu),
            )


@_check(
    "R.permute",
    "the resolvent average is invariant under joint permutation of matrices "
    "and weights",
    "equality",
    _HYP_R_BOTH,
)
def _r_permute(ctx):
    w = ctx.weights()
    perm = ctx.rng.permutation(ctx.m)
    for items in _both_tuples(ctx):
        shuffled = [items[i] for i in perm]
        for mu in MU_NONNEG:
            ctx.residual(
                means.resolvent_average(items, w, mu),
                means.resolvent_average(shuffled, w[perm], mu),
            )


@_check(
    "R.homog",
    "R_mu(c A) = c R_{mu/c}(A) for c > 0",
    "equality",
    _HYP_R_BOTH,
)
def _r_homog(ctx):
    w = ctx.weights()
    for items in _both_tuples(ctx):
        for c in SCALE_GRID:
            scaled = [c * a for a in items]
            for mu in MU_NONNEG:
                ctx.residual(
                    means.resolvent_average(scaled, w, mu),
                    c * means.resolvent_average(items, w, mu / c),
                )


@_check(
    "R.monotone",
    "A_i <= B_i implies R_mu(A) <= R_mu(B) on PD tuples",
    "inequality",
    _HYP_R_PD,
)
def _r_monotone(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    bigger = [a + ctx.pd(0.2, 1.0) for a in items]
    for mu in MU_NONNEG:
        ctx.margin(
            means.resolvent_average(items, w, mu),
            means.resolvent_average(bigger, w, mu),
        )


@_check(
    "R.muMonotone",
    "R_mu <= R_nu for mu <= nu, up to the arithmetic mean at infinity",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_NONNEG + (math.inf,)),
)
def _r_mu_monotone(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    grid = MU_NONNEG + (math.inf,)
    values = [means.resolvent_average(items, w, mu) for mu in grid]
    for lo, hi in zip(values, values[1:]):
        ctx.margin(lo, hi)


@_check(
    "R.invPairs",
    "uniform-weight resolvent average of (A_1, A_1^{-1}, ..., A_m, A_m^{-1}) "
    "at shift 1 is the identity",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, m_values=(1, 2), mu_grid=(1.0,)),
)
def _r_inv_pairs(ctx):
    m = 1 + ctx.index % 2
    for kind in ("pd", "sect"):
        items = []
        for _ in range(m):
            a = ctx.pd() if kind == "pd" else ctx.sect()
            items.extend([a, inv(a)])
        w = np.full(2 * m, 1.0 / (2 * m))
        ctx.residual(means.resolvent_average(items, w, 1.0), _eye(ctx.dim))


@_check(
    "R.recursion",
    "the m-variable resolvent average equals the two-variable average of the "
    "(m-1)-variable one with the last matrix",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, m_values=(2, 3), mu_grid=MU_NONNEG),
)
def _r_recursion(ctx):
    m = 2 + ctx.index % 2
    w = ctx.weights(m)
    for kind in ("pd", "sect"):
        items = [ctx.pd() if kind == "pd" else ctx.sect() for _ in range(m)]
        head_w = w[:-1] / (1.0 - w[-1])
        for mu in MU_NONNEG:
            head = means.resolvent_average(items[:-1], head_w, mu)
            ctx.residual(
                means.resolvent_average(items, w, mu),
                means.resolvent_average([head, items[-1]], (1.0 - w[-1], w[-1]), mu),
            )


@_check(
    "R.jointConcave",
    "t R_mu(A) + (1-t) R_mu(B) <= R_mu(t A + (1-t) B) on PD tuples",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_NONNEG),
)
def _r_joint_concave(ctx):
    w = ctx.weights()
    xs = ctx.pd_tuple()
    ys = ctx.pd_tuple()
    for mu in MU_NONNEG:
        rx = means.resolvent_average(xs, w, mu)
        ry = means.resolvent_average(ys, w, mu)
        for t in T_GRID:
            mixed = [t * x + (1.0 - t) * y for x, y in zip(xs, ys)]
            ctx.margin(t * rx + (1.0 - t) * ry, means.resolvent_average(mixed, w, mu))


@_check(
    "HRA.chain",
    "harmonic <= resolvent average <= arithmetic on PD tuples",
    "inequality",
    _HYP_R_PD,
)
def _hra_chain(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    harm = means.harmonic_mean(items, w)
    arith = means.arithmetic_mean(items, w)
    for mu in MU_NONNEG:
        r = means.resolvent_average(items, w, mu)
        ctx.margin(harm, r)
        ctx.margin(r, arith)


# ---------------------------------------------------------------------------
# arithmetic#harmonic-mean properties
# ---------------------------------------------------------------------------

_HYP_L_BOTH = Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_SIGNED)
_HYP_L_PD = Hypothesis(ensemble="pd", mu_grid=MU_SIGNED)


@_check(
    "L.idempotency",
    "arithmetic#harmonic mean of (A, ..., A) is A for every shift",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_EXTENDED),
)
def _l_idempotency(ctx):
    w = ctx.weights()
    for kind in ("pd", "sect"):
        a = ctx.pd() if kind == "pd" else ctx.sect()
        for mu in MU_EXTENDED:
            ctx.residual(means.ah_mean([a] * ctx.m, w, mu), a)


@_check(
    "L.selfdual",
    "inverse of the shift-mu mean of the inverses equals the shift-(-mu) mean",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_EXTENDED),
)
def _l_selfdual(ctx):
    w = ctx.weights()
    for items in _both_tuples(ctx):
        inv_items = [inv(a) for a in items]
        for mu in MU_EXTENDED:
            ctx.residual(
                inv(means.ah_mean(inv_items, w, mu)),
                means.ah_mean(items, w, -mu),
            )


@_check(
    "L.unitary",
    "U* L(A_1..A_m) U = L(U* A_1 U, ..., U* A_m U)",
    "equality",
    _HYP_L_BOTH,
)
def _l_unitary(ctx):
    w = ctx.weights()
    u = ctx.unitary()
    uh = u.conj().T
    for items in _both_tuples(ctx):
        rotated = [uh @ a @ u for a in items]
        for mu in MU_SIGNED:
            ctx.residual(
                uh @ means.ah_mean(items, w, mu) @ u,
                means.ah_mean(rotated, w, mu),
            )


@_check(
    "L.permute",
    "the arithmetic#harmonic mean is invariant under joint permutation",
    "equality",
    _HYP_L_BOTH,
)
def _l_permute(ctx):
    w = ctx.weights()
    perm = ctx.rng.permutation(ctx.m)
    for items in _both_tuples(ctx):
        shuffled = [items[i] for i in perm]
        for mu in MU_SIGNED:
            ctx.residual(
                means.ah_mean(items, w, mu),
                means.ah_mean(shuffled, w[perm], mu),
            )


@_check(
    "L.homog",
    "L_mu(c A) = c L_{mu/c}(A) for c > 0 and mu >= 0; for mu < 0 the "
    "inversion-based definition gives L_mu(c A) = c L_{mu c}(A) instead",
    "equality",
    _HYP_L_BOTH,
)
def _l_homog(ctx):
    w = ctx.weights()
    for items in _both_tuples(ctx):
        for c in SCALE_GRID:
            scaled = [c * a for a in items]
            for mu in MU_SIGNED:
                inner = mu / c if mu >= 0.0 else mu * c
                ctx.residual(
                    means.ah_mean(scaled, w, mu),
                    c * means.ah_mean(items, w, inner),
                )


@_check(
    "L.homog.negshift",
    "as-claimed homogeneity L_mu(c A) = c L_{mu/c}(A) extended to mu < 0; "
    "inconsistent with the negative-shift definition, expected to fail",
    "equality",
    Hypothesis(ensemble="pd", mu_grid=(-10.0, -1.0, -0.1)),
    required=False,
)
def _l_homog_negshift(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    for c in SCALE_GRID:
        scaled = [c * a for a in items]
        for mu in (-10.0, -1.0, -0.1):
            ctx.residual(
                means.ah_mean(scaled, w, mu),
                c * means.ah_mean(items, w, mu / c),
            )


@_check(
    "L.monotone",
    "A_i >= B_i implies L_mu(A) >= L_mu(B) on PD tuples",
    "inequality",
    _HYP_L_PD,
)
def _l_monotone(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    bigger = [a + ctx.pd(0.2, 1.0) for a in items]
    for mu in MU_SIGNED:
        ctx.margin(means.ah_mean(items, w, mu), means.ah_mean(bigger, w, mu))


@_check(
    "L.vsR",
    "harmonic <= resolvent average <= arithmetic#harmonic mean <= arithmetic "
    "for nonnegative shifts on PD tuples",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_NONNEG),
)
def _l_vs_r(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    harm = means.harmonic_mean(items, w)
    arith = means.arithmetic_mean(items, w)
    for mu in MU_NONNEG:
        r = means.resolvent_average(items, w, mu)
        lmean = means.ah_mean(items, w, mu)
        ctx.margin(harm, r)
        ctx.margin(r, lmean)
        ctx.margin(lmean, arith)


@_check(
    "L.invPairs",
    "uniform-weight arithmetic#harmonic mean of (A_1, A_1^{-1}, ..., A_m, "
    "A_m^{-1}) at shift 0 is the identity: the harmonic mean of an "
    "inversion-closed tuple is the inverse of its arithmetic mean",
    "equality",
    Hypothesis(ensemble="pd", m_values=(1, 2), mu_grid=(0.0,)),
)
def _l_inv_pairs(ctx):
    m = 1 + ctx.index % 2
    items = []
    for _ in range(m):
        a = ctx.pd()
        items.extend([a, inv(a)])
    w = np.full(2 * m, 1.0 / (2 * m))
    ctx.residual(means.ah_mean(items, w, 0.0), _eye(ctx.dim))


@_check(
    "L.invPairs.shift1",
    "as-claimed identity at shift 1 for inverse-closed tuples; false already "
    "for scalars (a, 1/a) where it gives sqrt(a) + 1/sqrt(a) - 1, expected "
    "to fail",
    "equality",
    Hypothesis(ensemble="pd", m_values=(1, 2), mu_grid=(1.0,)),
    required=False,
)
def _l_inv_pairs_shift1(ctx):
    m = 1 + ctx.index % 2
    items = []
    for _ in range(m):
        a = ctx.pd()
        items.extend([a, inv(a)])
    w = np.full(2 * m, 1.0 / (2 * m))
    ctx.residual(means.ah_mean(items, w, 1.0), _eye(ctx.dim))


@_check(
    "L.muMonotone",
    "L_mu <= L_nu for mu <= nu across the extended shift grid",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_EXTENDED),
)
def _l_mu_monotone(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    grid = (-math.inf, -10.0, -1.0, 0.0, 1.0, 10.0, math.inf)
    values = [means.ah_mean(items, w, mu) for mu in grid]
    for lo, hi in zip(values, values[1:]):
        ctx.margin(lo, hi)


@_check(
    "L.twovar",
    "L_mu(A, B) at equal weights equals (A + mu I) # (B + mu I) - mu I",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _l_twovar(ctx):
    eye = _eye(ctx.dim)
    for a, b in _both_pairs(ctx):
        for mu in MU_NONNEG:
            ctx.residual(
                means.ah_mean([a, b], (0.5, 0.5), mu),
                means.geometric_mean(a + mu * eye, b + mu * eye, 0.5) - mu * eye,
            )


@_check(
    "L.jointConcave",
    "t L_mu(A) + (1-t) L_mu(B) <= L_mu(t A + (1-t) B) on PD tuples",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_SIGNED),
)
def _l_joint_concave(ctx):
    w = ctx.weights()
    xs = ctx.pd_tuple()
    ys = ctx.pd_tuple()
    for mu in MU_SIGNED:
        lx = means.ah_mean(xs, w, mu)
        ly = means.ah_mean(ys, w, mu)
        for t in T_GRID:
            mixed = [t * x + (1.0 - t) * y for x, y in zip(xs, ys)]
            ctx.margin(t * lx + (1.0 - t) * ly, means.ah_mean(mixed, w, mu))


@_check(
    "L.riccati",
    "X = L_mu + mu I solves sum_i w_i X (A_i + mu I)^{-1} X = "
    "sum_i w_i (A_i + mu I)",
    "equality",
    Hypothesis(ensemble="both", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _l_riccati(ctx):
    w = ctx.weights()
    eye = _eye(ctx.dim)
    for items in _both_tuples(ctx):
        for mu in MU_NONNEG:
            x = means.ah_mean(items, w, mu) + mu * eye
            ctx.residuals.append(means.ah_riccati_residual(items, w, mu, x))


@_check(
    "L.limits",
    "the gap to the arithmetic mean shrinks monotonically as the shift grows "
    "(and to the harmonic mean as it falls), reaching 1% at shift 1e4",
    "limit",
    Hypothesis(ensemble="pd", mu_grid=LIMIT_MU_GRID, m_values=(2, 3)),
)
def _l_limits(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    arith = means.arithmetic_mean(items, w)
    harm = means.harmonic_mean(items, w)
    up = [spectral_norm(means.ah_mean(items, w, mu) - arith) for mu in LIMIT_MU_GRID]
    down = [
        spectral_norm(means.ah_mean(items, w, -mu) - harm) for mu in LIMIT_MU_GRID
    ]
    ctx.details["arith_gaps"] = up
    ctx.details["harm_gaps"] = down
    ctx.expect(
        all(x > y for x, y in zip(up, up[1:])), "gap to arithmetic mean not decreasing"
    )
    ctx.expect(
        all(x > y for x, y in zip(down, down[1:])), "gap to harmonic mean not decreasing"
    )
    ctx.expect(up[-1] <= 1e-2 * spectral_norm(arith), "arithmetic gap too large")
    ctx.expect(down[-1] <= 1e-2 * spectral_norm(harm), "harmonic gap too large")


# ---------------------------------------------------------------------------
# maps meet means
# ---------------------------------------------------------------------------


@_check(
    "Phi.harmMean",
    "Phi of the inverted sum of shifted inverses is below the same expression "
    "built from Phi(A_i)",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_NONNEG),
)
def _phi_harm_mean(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    phi = ctx.pulm()
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        acc = sum(wi * inv(a + mu * eye) for wi, a in zip(w, items))
        acc_phi = sum(wi * inv(phi(a) + mu * eye) for wi, a in zip(w, items))
        ctx.margin(phi(inv(acc)), inv(acc_phi))


@_check(
    "Phi.R",
    "Phi(R_mu(A)) <= R_mu(Phi(A)) for positive unital Phi and mu > 0",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_POS),
)
def _phi_r(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    phi = ctx.pulm()
    mapped = phi.apply_tuple(items)
    for mu in MU_POS:
        ctx.margin(
            phi(means.resolvent_average(items, w, mu)),
            means.resolvent_average(mapped, w, mu),
        )


@_check(
    "Phi.R.reverse",
    "R_mu(Phi(A)) <= (1/beta) Phi(R_{beta mu}(A)) with beta = 4hk/(k+h)^2 "
    "when h <= A_i <= k",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K, mu_grid=MU_POS),
)
def _phi_r_reverse(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    phi = ctx.pulm()
    mapped = phi.apply_tuple(items)
    beta = 4.0 * PD_H * PD_K / (PD_K + PD_H) ** 2
    for mu in MU_POS:
        ctx.margin(
            means.resolvent_average(mapped, w, mu),
            (1.0 / beta) * phi(means.resolvent_average(items, w, beta * mu)),
        )


@_check(
    "R.vsGM",
    "R_mu(A, B) + mu I >= C (A #_w B + mu I) with C from the shifted "
    "endpoint bounds, plus the arithmetic-mean corollary",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K, mu_grid=MU_NONNEG, lambda_grid=LAMBDA_GRID),
)
def _r_vs_gm(ctx):
    a, b = ctx.pd(), ctx.pd()
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        ks = 1.0 / (PD_K + mu)
        hs = 1.0 / (PD_H + mu)
        for lam in LAMBDA_GRID:
            t = min(lam, 1.0 - lam)
            cval = 1.0 / (((1.0 - t) * ks + t * hs) / (ks ** (1.0 - t) * hs**t))
            r = means.resolvent_average([a, b], (1.0 - lam, lam), mu)
            gm = means.geometric_mean(a, b, lam)
            ctx.margin(cval * (gm + mu * eye), r + mu * eye)
            arith_const = ((1.0 - t) * PD_H + t * PD_K) / (
                PD_H ** (1.0 - t) * PD_K**t
            )
            arith = means.arithmetic_mean([a, b], (1.0 - lam, lam))
            ctx.margin(
                (cval / arith_const) * arith - mu * (1.0 - cval) * eye, r
            )


@_check(
    "R.vsL.twovar",
    "R_mu(A, B) + mu I <= (A + mu I) # (B + mu I) at equal weights",
    "inequality",
    Hypothesis(ensemble="pd", mu_grid=MU_NONNEG),
)
def _r_vs_l_twovar(ctx):
    a, b = ctx.pd(), ctx.pd()
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        ctx.margin(
            means.resolvent_average([a, b], (0.5, 0.5), mu) + mu * eye,
            means.geometric_mean(a + mu * eye, b + mu * eye, 0.5),
        )


@_check(
    "Phi.L",
    "Phi(L_mu(A)) <= L_mu(Phi(A)) across the extended shift grid",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K, mu_grid=MU_EXTENDED),
)
def _phi_l(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    phi = ctx.pulm()
    mapped = phi.apply_tuple(items)
    for mu in MU_EXTENDED:
        ctx.margin(
            phi(means.ah_mean(items, w, mu)),
            means.ah_mean(mapped, w, mu),
        )


@_check(
    "Phi.L.reverse",
    "L_mu(Phi(A)) <= (1/beta) Phi(L_{beta mu}(A)) with beta = 4hk/(k+h)^2",
    "inequality",
    Hypothesis(ensemble="pd", h=PD_H, k=PD_K, mu_grid=MU_EXTENDED),
)
def _phi_l_reverse(ctx):
    w = ctx.weights()
    items = ctx.pd_tuple()
    phi = ctx.pulm()
    mapped = phi.apply_tuple(items)
    beta = 4.0 * PD_H * PD_K / (PD_K + PD_H) ** 2
    for mu in MU_EXTENDED:
        ctx.margin(
            means.ah_mean(mapped, w, mu),
            (1.0 / beta) * phi(means.ah_mean(items, w, beta * mu)),
        )


@_check(
    "Phi.R.sect.reverse",
    "beta R_mu(Phi(Re A)) <= Phi(R_mu(Re A)) + ((k-h)/(k+h))^2 mu I with the "
    "bounds taken on Re A_i + mu I; includes the compression and harmonic "
    "special cases",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _phi_r_sect_reverse(ctx):
    w = ctx.weights()
    res = [herm_part(a) for a in ctx.sect_tuple()]
    h0, k0 = 0.5, 2.0  # spectra of the Hermitian parts of the sector ensemble
    for phi in (ctx.pulm(), ctx.pulm(compress=True)):
        mapped = phi.apply_tuple(res)
        eye_out = _eye(phi.output_dim)
        for mu in MU_NONNEG:
            h, k = h0 + mu, k0 + mu
            beta = 4.0 * k * h / (k + h) ** 2
            ctx.margin(
                beta * means.resolvent_average(mapped, w, mu),
                phi(means.resolvent_average(res, w, mu))
                + ((k - h) / (k + h)) ** 2 * mu * eye_out,
            )
        kant = (k0 + h0) ** 2 / (4.0 * k0 * h0)
        ctx.margin(
            means.harmonic_mean(mapped, w),
            kant * phi(means.harmonic_mean(res, w)),
        )


# ---------------------------------------------------------------------------
# the counterexample and the sector sandwiches
# ---------------------------------------------------------------------------

_CE_EXPECTED = 19.0 / 17.0


@_check(
    "counterexample.ReR",
    "Re R_1(((1+i)I, I), (1/2, 1/2)) = (19/17) I exceeds R_1 of the real "
    "parts, so the real part of the resolvent average does not dominate",
    "counterexample",
    Hypothesis(ensemble="fixed"),
)
def _counterexample_rer(ctx):
    n = 2
    eye = _eye(n)
    a1 = (1.0 + 1.0j) * eye
    a2 = eye
    r = means.resolvent_average([a1, a2], (0.5, 0.5), 1.0)
    re_r = herm_part(r)
    observed = float(re_r[0, 0].real)
    ctx.details["observed_scalar"] = observed
    ctx.details["derived_scalar"] = _CE_EXPECTED
    ctx.expect(
        spectral_norm(re_r - _CE_EXPECTED * eye) <= 1e-12 * _CE_EXPECTED,
        "scalar value drifted from 19/17",
    )
    r_of_re = means.resolvent_average([herm_part(a1), herm_part(a2)], (0.5, 0.5), 1.0)
    ctx.expect(spectral_norm(r_of_re - eye) <= 1e-12, "R_1 of real parts is not I")
    verdict = loewner_cmp(re_r, r_of_re, ctx.tol)
    ctx.details["violation_margin"] = verdict.margin
    ctx.expect(not verdict.leq, "claimed order unexpectedly holds")
    ctx.expect(
        abs(verdict.margin + 2.0 / 17.0) <= 1e-9, "violation margin is not -2/17"
    )


@_check(
    "counterexample.ReR.altform",
    "alternative closed form (36 - sqrt(17))/sqrt(17) for the counterexample "
    "scalar; the derived value is 19/17, so this variant is expected to fail",
    "equality",
    Hypothesis(ensemble="fixed"),
    required=False,
)
def _counterexample_rer_altform(ctx):
    n = 2
    eye = _eye(n)
    r = means.resolvent_average([(1.0 + 1.0j) * eye, eye], (0.5, 0.5), 1.0)
    alt = (36.0 - math.sqrt(17.0)) / math.sqrt(17.0)
    ctx.details["alt_scalar"] = alt
    ctx.residual(herm_part(r), alt * eye)


@_check(
    "Sect.R.lower",
    "R_mu(Re A) + mu I <= sec^2(g) (Re R_mu(A) + mu I) with g the shifted "
    "sector angle",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _sect_r_lower(ctx):
    w = ctx.weights()
    items = ctx.sect_tuple(scale=SECT_NORM_SCALE)
    res = [herm_part(a) for a in items]
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        sec2 = 1.0 / math.cos(shifted_sector_angle(ctx.alpha, mu)) ** 2
        ctx.margin(
            means.resolvent_average(res, w, mu) + mu * eye,
            sec2 * (herm_part(means.resolvent_average(items, w, mu)) + mu * eye),
        )


@_check(
    "Sect.R.upper",
    "Re R_mu(A) + mu I <= sec^2(g) (R_mu(Re A) + mu I), with both rearranged "
    "sandwich corollaries and the harmonic/arithmetic envelope",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _sect_r_upper(ctx):
    w = ctx.weights()
    items = ctx.sect_tuple(scale=SECT_NORM_SCALE)
    res = [herm_part(a) for a in items]
    eye = _eye(ctx.dim)
    harm = means.harmonic_mean(res, w)
    arith = means.arithmetic_mean(res, w)
    for mu in MU_NONNEG:
        g = shifted_sector_angle(ctx.alpha, mu)
        cos2 = math.cos(g) ** 2
        sec2 = 1.0 / cos2
        sin2 = math.sin(g) ** 2
        tan2 = math.tan(g) ** 2
        re_r = herm_part(means.resolvent_average(items, w, mu))
        r_re = means.resolvent_average(res, w, mu)
        ctx.margin(re_r + mu * eye, sec2 * (r_re + mu * eye))
        ctx.margin(cos2 * re_r - mu * sin2 * eye, r_re)
        ctx.margin(r_re, sec2 * re_r + mu * tan2 * eye)
        ctx.margin(cos2 * r_re - mu * sin2 * eye, re_r)
        ctx.margin(re_r, sec2 * r_re + mu * tan2 * eye)
        ctx.margin(cos2 * harm - mu * sin2 * eye, re_r)
        ctx.margin(re_r, sec2 * arith + mu * tan2 * eye)


@_check(
    "Sect.R.vsGM",
    "Re R_mu(A, B) + mu I >= C cos^2(g) (cos^2(a) Re(A #_w B) + mu I) for "
    "sector pairs with bounded real parts",
    "inequality",
    Hypothesis(
        ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG, lambda_grid=LAMBDA_GRID
    ),
)
def _sect_r_vs_gm(ctx):
    a = ctx.sect(scale=SECT_NORM_SCALE)
    b = ctx.sect(scale=SECT_NORM_SCALE)
    eye = _eye(ctx.dim)
    h0, k0 = SECT_NORM_H, SECT_NORM_K
    cos2a = math.cos(ctx.alpha) ** 2
    for mu in MU_NONNEG:
        cos2g = math.cos(shifted_sector_angle(ctx.alpha, mu)) ** 2
        ks = 1.0 / (k0 + mu)
        hs = 1.0 / (h0 + mu)
        for lam in LAMBDA_GRID:
            t = min(lam, 1.0 - lam)
            cval = 1.0 / (((1.0 - t) * ks + t * hs) / (ks ** (1.0 - t) * hs**t))
            re_gm = herm_part(means.geometric_mean(a, b, lam))
            re_r = herm_part(means.resolvent_average([a, b], (1.0 - lam, lam), mu))
            ctx.margin(
                cval * cos2g * (cos2a * re_gm + mu * eye),
                re_r + mu * eye,
            )


@_check(
    "R.isKuboAndo",
    "the scalar function f(t) = (w (1+mu)^{-1} + (1-w)(t+mu)^{-1})^{-1} - mu "
    "is increasing with f(1) = 1, reproduces the resolvent average against "
    "the identity slot (f(B) = R_mu(I, B)), and the mean it generates has "
    "the relative-shift closed form (w ((1+mu) A)^{-1} + (1-w)(B + mu "
    "A)^{-1})^{-1} - mu A",
    "equality",
    Hypothesis(ensemble="pd", mu_grid=MU_POS, lambda_grid=LAMBDA_GRID),
)
def _r_is_kubo_ando(ctx):
    a, b = ctx.pd(), ctx.pd()
    eye = _eye(ctx.dim)
    wa, va = np.linalg.eigh(herm_part(a))
    sq = (va * np.sqrt(wa)) @ va.conj().T
    isq = (va * (wa**-0.5)) @ va.conj().T
    mid = herm_part(isq @ b @ isq)
    wm, vm = np.linalg.eigh(mid)
    wb, vb = np.linalg.eigh(herm_part(b))
    for mu in MU_POS:
        for lam in LAMBDA_GRID:
            fs = [means.resolvent_rep_function(lam, mu, t) for t in (0.25, 0.5, 1.0, 2.0, 5.0)]
            ctx.expect(
                all(x < y for x, y in zip(fs, fs[1:])),
                "representing function not increasing",
            )
            ctx.expect(
                abs(means.resolvent_rep_function(lam, mu, 1.0) - 1.0) <= 1e-14,
                "representing function not normalized at 1",
            )
            f_of_b = (vb * [means.resolvent_rep_function(lam, mu, t) for t in wb]) @ vb.conj().T
            ctx.residual(means.resolvent_average([eye, b], (lam, 1.0 - lam), mu), f_of_b)
            fvals = np.array([means.resolvent_rep_function(lam, mu, t) for t in wm])
            generated = sq @ ((vm * fvals) @ vm.conj().T) @ sq
            closed = inv(lam * inv((1.0 + mu) * a) + (1.0 - lam) * inv(b + mu * a)) - mu * a
            ctx.residual(generated, herm_part(closed))


@_check(
    "R.isKuboAndo.fixedshift",
    "as-claimed identity R_mu(A, B) = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}: "
    "false because the fixed-shift resolvent average is not congruence "
    "covariant (already for scalars a=2, b=1, w=1/2, mu=1 the sides are 1.4 "
    "and 10/7); expected to fail",
    "equality",
    Hypothesis(ensemble="pd", mu_grid=MU_POS, lambda_grid=LAMBDA_GRID),
    required=False,
)
def _r_is_kubo_ando_fixedshift(ctx):
    a, b = ctx.pd(), ctx.pd()
    wa, va = np.linalg.eigh(herm_part(a))
    sq = (va * np.sqrt(wa)) @ va.conj().T
    isq = (va * (wa**-0.5)) @ va.conj().T
    mid = herm_part(isq @ b @ isq)
    wm, vm = np.linalg.eigh(mid)
    for mu in MU_POS:
        for lam in LAMBDA_GRID:
            fvals = np.array([means.resolvent_rep_function(lam, mu, t) for t in wm])
            rep = sq @ ((vm * fvals) @ vm.conj().T) @ sq
            ctx.residual(means.resolvent_average([a, b], (lam, 1.0 - lam), mu), rep)


@_check(
    "L.sect.lower",
    "L_mu(Re A) <= sec(a) Re L_mu(A) + (sec(a) - 1) mu I with the unshifted "
    "sector angle a",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _l_sect_lower(ctx):
    w = ctx.weights()
    items = ctx.sect_tuple()
    res = [herm_part(a) for a in items]
    eye = _eye(ctx.dim)
    seca = 1.0 / math.cos(ctx.alpha)
    for mu in MU_NONNEG:
        ctx.margin(
            means.ah_mean(res, w, mu),
            seca * herm_part(means.ah_mean(items, w, mu)) + (seca - 1.0) * mu * eye,
        )


@_check(
    "L.sect.lower.secgamma",
    "sharper variant of the lower sector bound with the shifted angle g in "
    "place of a",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
    required=False,
)
def _l_sect_lower_secgamma(ctx):
    w = ctx.weights()
    items = ctx.sect_tuple(scale=SECT_NORM_SCALE)
    res = [herm_part(a) for a in items]
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        secg = 1.0 / math.cos(shifted_sector_angle(ctx.alpha, mu))
        ctx.margin(
            means.ah_mean(res, w, mu),
            secg * herm_part(means.ah_mean(items, w, mu)) + (secg - 1.0) * mu * eye,
        )


@_check(
    "L.sect.upper",
    "Re L_mu(A) <= sec^3(g) L_mu(Re A) + (sec^3(g) - 1) mu I",
    "inequality",
    Hypothesis(ensemble="sectorial", alphas=ALPHA_GRID, mu_grid=MU_NONNEG),
)
def _l_sect_upper(ctx):
    w = ctx.weights()
    items = ctx.sect_tuple(scale=SECT_NORM_SCALE)
    res = [herm_part(a) for a in items]
    eye = _eye(ctx.dim)
    for mu in MU_NONNEG:
        sec3 = 1.0 / math.cos(shifted_sector_angle(ctx.alpha, mu)) ** 3
        ctx.margin(
            herm_part(means.ah_mean(items, w, mu)),
            sec3 * means.ah_mean(res, w, mu) + (sec3 - 1.0) * mu * eye,
        )


# ---------------------------------------------------------------------------
# campaign machinery
# ---------------------------------------------------------------------------


def list_checks():
    """All catalog entries in stable registration order."""
    return list(_REGISTRY.values())


def get_check(check_id):
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(f"no check named {check_id!r}") from None


@dataclass(frozen=True)
class CampaignConfig:
    dims: tuple = (1, 2, 3, 5, 8)
    samples: int = 200
    master_seed: int = None
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    checks: tuple = None  # None selects every required check
    report_path: str = None
    report_format: str = "json"

    def __post_init__(self):
        if self.master_seed is None:
            object.__setattr__(self, "master_seed", default_master_seed())
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ConfigError(f"dims must be nonempty positive integers, got {self.dims}")
        object.__setattr__(self, "dims", dims)
        if int(self.samples) < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples}")
        object.__setattr__(self, "samples", int(self.samples))
        if self.report_format not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {self.report_format!r}")
        if self.checks is not None:
            object.__setattr__(self, "checks", tuple(self.checks))

    def to_dict(self):
        return {
            "dims": list(self.dims),
            "samples": self.samples,
            "master_seed": self.master_seed,
            "tolerances": {
                "atol": self.tolerances.atol,
                "rtol": self.tolerances.rtol,
                "herm_tol": self.tolerances.herm_tol,
            },
            "eq_tol": EQ_TOL,
            "checks": list(self.checks) if self.checks is not None else None,
        }


def run_check(check_id, config=None):
    """Run one catalog entry and return its CheckReport."""
    spec = get_check(check_id)
    config = config or CampaignConfig()
    tol = config.tolerances
    start = time.perf_counter()
    margins = []
    residuals = []
    failures = []
    details = {}
    samples = 1 if spec.hypothesis.ensemble == "fixed" else config.samples
    m_values = spec.hypothesis.m_values or (2, 3)
    alphas = spec.hypothesis.alphas or ALPHA_GRID
    for j in range(samples):
        rng = check_rng(config.master_seed, f"check:{spec.id}", j)
        ctx = SampleCtx(
            rng=rng,
            dim=config.dims[j % len(config.dims)],
            m=m_values[j % len(m_values)],
            alpha=alphas[j % len(alphas)],
            index=j,
            tol=tol,
        )
        try:
            spec.fn(ctx)
        except Exception as exc:  # noqa: BLE001 - a crashing sample must fail loudly
            failures.append(
                {"sample": j, "digest": ctx.digest(), "note": f"{type(exc).__name__}: {exc}"}
            )
            continue
        margins.extend(ctx.margins)
        residuals.extend(ctx.residuals)
        if ctx.details:
            details = ctx.details
        if not ctx.sample_passed(tol.order_tol):
            note = "; ".join(ctx.notes) if ctx.notes else _verdict_note(ctx, tol)
            if len(failures) < 16:
                failures.append({"sample": j, "digest": ctx.digest(), "note": note})
    passed = not failures
    report = CheckReport(
        id=spec.id,
        kind=spec.kind,
        required=spec.required,
        samples_run=samples,
        worst_margin=min(margins) if margins else None,
        worst_residual=max(residuals) if residuals else None,
        failures=failures,
        passed=passed,
        wall_time=time.perf_counter() - start,
        details=details,
    )
    return report


def _verdict_note(ctx, tol):
    worst_m = min(ctx.margins) if ctx.margins else None
    worst_r = max(ctx.residuals) if ctx.residuals else None
    if worst_m is not None and worst_m < -tol.order_tol:
        return f"margin {worst_m:.3e} below -{tol.order_tol:.1e}"
    if worst_r is not None and worst_r > EQ_TOL:
        return f"residual {worst_r:.3e} above {EQ_TOL:.1e}"
    return "sample predicate failed"


@dataclass
class CampaignResult:
    config: CampaignConfig
    reports: list
    summary: dict

    def to_dict(self):
        return {
            "config": self.config.to_dict(),
            "checks": [r.to_dict() for r in self.reports],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["id", "kind", "required", "samples_run", "worst_margin", "worst_residual", "passed"]
        )
        for r in self.reports:
            writer.writerow(
                [
                    r.id,
                    r.kind,
                    r.required,
                    r.samples_run,
                    "" if r.worst_margin is None else repr(r.worst_margin),
                    "" if r.worst_residual is None else repr(r.worst_residual),
                    r.passed,
                ]
            )
        return buf.getvalue()

    def write(self, path=None, fmt=None):
        path = path or self.config.report_path
        fmt = fmt or self.config.report_format
        text = self.to_json() if fmt == "json" else self.to_csv()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)

    @property
    def all_required_passed(self):
        return all(r.passed for r in self.reports if r.required)


def run_all(config=None):
    """Run the selected checks (default: every required one)."""
    config = config or CampaignConfig()
    if config.checks is None:
        selected = [s.id for s in list_checks() if s.required]
    else:
        selected = [get_check(cid).id for cid in config.checks]
    reports = [run_check(cid, config) for cid in selected]
    failed = [r.id for r in reports if not r.passed]
    required_failed = [r.id for r in reports if r.required and not r.passed]
    summary = {
        "total": len(reports),
        "passed": sum(1 for r in reports if r.passed),
        "failed": failed,
        "required_failed": required_failed,
    }
    result = CampaignResult(config=config, reports=reports, summary=summary)
    if config.report_path:
        result.write()
    return result
