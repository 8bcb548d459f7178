"""Constructivity decision and parameter synthesis for polynomial pairs.

Decides whether a pair (P, Q) of m-variable Laurent polynomials is the top
row of an n-step interleaved product of signal operators and z-rotations.
The decision peels the product one factor at a time: whenever the top
coefficient slices of P and Q in some variable agree up to a unimodular
factor e^{2i phi}, right-multiplying by the inverse of A(a_j) e^{i phi s_z}
lowers the degree in that variable by one.  If the degree sum falls short of
the remaining step count by two or more, two steps are absorbed into an
identity padding instead.  A pair is accepted once the step budget is
exhausted and what remains is a pure phase rotation (unimodular constant P,
zero Q).

Every branch taken is recorded in a trace, from which one valid choice of
angle and index parameters can be read off when the pair is accepted.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .laurent import EPS, LaurentPoly
from .su2 import MqspSequence, PQPair, half_diff, half_sum

REASON_BASE = "final pair is not a pure phase rotation"
REASON_DEGREE = "degree sum neither equals the step count nor leaves room for padding"
REASON_PHASE = "no variable has unimodular-proportional top coefficient slices"


@dataclass(frozen=True)
class IdentityPad:
    """Two trailing steps absorbed by an identity padding (degree sum <= steps - 2)."""

    steps_left: int


@dataclass(frozen=True)
class PhaseReduction:
    """One signal operator peeled off variable ``index`` at angle ``phase``."""

    steps_left: int
    index: int
    phase: float
    reduced: PQPair


@dataclass(frozen=True)
class BaseAccept:
    """Step budget exhausted with a pure phase rotation left over."""

    phase0: float


@dataclass(frozen=True)
class Reject:
    steps_left: int
    reason: str


TraceStep = IdentityPad | PhaseReduction | BaseAccept | Reject


@dataclass(frozen=True)
class DecisionTrace:
    """Ordered record of the branches taken; ends in BaseAccept or Reject."""

    steps: tuple[TraceStep, ...]

    @property
    def accepted(self) -> bool:
        return bool(self.steps) and isinstance(self.steps[-1], BaseAccept)

    @property
    def rejection(self) -> Reject | None:
        last = self.steps[-1] if self.steps else None
        return last if isinstance(last, Reject) else None


@dataclass(frozen=True)
class SynthesisResult:
    constructible: bool
    sequence: MqspSequence | None
    trace: DecisionTrace


@dataclass(frozen=True)
class NecessaryReport:
    """Outcome of the cheap rejection filters, each computed independently.

    Any False flag certifies the pair is not constructible in ``steps``
    steps; all-True proves nothing.
    """

    symmetry_p: bool
    symmetry_q: bool
    degree_equality: bool
    p_nonzero: bool
    parity_ok: bool
    normalization_ok: bool
    degrees: tuple[int, ...]
    degree_sum: int
    steps: int

    @property
    def all_ok(self) -> bool:
        return (
            self.symmetry_p
            and self.symmetry_q
            and self.degree_equality
            and self.p_nonzero
            and self.parity_ok
            and self.normalization_ok
        )


def find_phase(pair: PQPair, j: int, degree: int, tol: float = EPS) -> float | None:
    """Angle phi with P-slice = e^{2i phi} Q-slice at a_j^degree, or None.

    Both slices zero counts as vacuously satisfied with phi = 0.  Otherwise
    the candidate ratio is taken at the largest-modulus Q term (for
    stability) and verified term-wise across the whole slice.  Unimodularity
    of the ratio is measured as a modulus mismatch at the floored coefficient
    scale, like every other comparison; a scale-free test on the ratio itself
    would amplify the absolute rounding error carried by small slices.  The
    returned angle is the principal representative in (-pi/2, pi/2]; any
    representative mod pi reproduces the pair.
    """
    cp = pair.p.coeff_slice(j, degree)
    cq = pair.q.coeff_slice(j, degree)
    p_zero = cp.is_zero(tol)
    q_zero = cq.is_zero(tol)
    if p_zero and q_zero:
        return 0.0
    if p_zero or q_zero:
        return None
    ref = max(cq.terms, key=lambda k: abs(cq.terms[k]))
    top_p = cp.terms.get(ref, 0j)
    top_q = cq.terms[ref]
    scale = max(1.0, cp.max_modulus(), cq.max_modulus())
    if top_p == 0 or abs(abs(top_p) - abs(top_q)) > tol * scale:
        return None
    ratio = top_p / top_q
    ratio /= abs(ratio)
    if not cp.approx_eq(cq * ratio, tol):
        return None
    phi = cmath.phase(ratio) / 2.0
    if phi <= -math.pi / 2.0:
        phi += math.pi
    return phi


def reduce_step(pair: PQPair, j: int, phi: float) -> PQPair:
    """Right-multiply the pair's matrix by (A(a_j) e^{i phi s_z})^{-1}.

    With ``phi`` returned by ``find_phase`` at the top degree of variable
    ``j``, the degree in that variable drops by exactly one and the other
    degrees are unchanged.
    """
    m = pair.variables
    cos_part = half_sum(j, m)
    sin_part = half_diff(j, m)
    e = cmath.exp(1j * phi)
    ec = e.conjugate()
    new_p = cos_part * pair.p * ec - sin_part * pair.q * e
    new_q = cos_part * pair.q * e - sin_part * pair.p * ec
    return PQPair(new_p, new_q)


def effective_degrees(pair: PQPair, tol: float = EPS) -> tuple[int, ...]:
    """Per-variable degrees of P counting only coefficients visible at ``tol``.

    Ignoring terms at or below tol times the (floored) coefficient scale
    keeps the recursion's degree bookkeeping consistent with its coefficient
    comparisons: the residue left behind by a peeled factor sits far below
    the tolerance and must not masquerade as surviving degree.
    """
    cutoff = tol * max(1.0, pair.p.max_modulus(), pair.q.max_modulus())
    degs = [0] * pair.variables
    for exps, coeff in pair.p.terms.items():
        if abs(coeff) > cutoff:
            for i, e in enumerate(exps):
                if abs(e) > degs[i]:
                    degs[i] = abs(e)
    return tuple(degs)


def run_decision(pair: PQPair, n: int, tol: float = EPS) -> DecisionTrace:
    """Decide constructibility in ``n`` steps, recording every branch.

    The recursion only ever shrinks the step budget by one or two, so it is
    realized as a loop.  Variables are scanned in ascending order and the
    first phase match wins, which makes the trace deterministic.
    """
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    steps: list[TraceStep] = []
    current = pair
    remaining = n
    while True:
        if remaining == 0:
            phase0 = _base_phase(current, tol)
            if phase0 is None:
                steps.append(Reject(0, REASON_BASE))
            else:
                steps.append(BaseAccept(phase0))
            return DecisionTrace(tuple(steps))
        degs = effective_degrees(current, tol)
        total = sum(degs)
        if total <= remaining - 2:
            steps.append(IdentityPad(remaining))
            remaining -= 2
            continue
        if total == remaining:
            phi = None
            for j in range(1, current.variables + 1):
                phi = find_phase(current, j, degs[j - 1], tol)
                if phi is not None:
                    current = reduce_step(current, j, phi)
                    steps.append(PhaseReduction(remaining, j, phi, current))
                    remaining -= 1
                    break
            if phi is None:
                steps.append(Reject(remaining, REASON_PHASE))
                return DecisionTrace(tuple(steps))
            continue
        steps.append(Reject(remaining, REASON_DEGREE))
        return DecisionTrace(tuple(steps))


def _base_phase(pair: PQPair, tol: float) -> float | None:
    """arg(P) if P is a unimodular constant and Q is zero, else None."""
    c0 = pair.p.constant_coeff()
    if abs(abs(c0) - 1.0) > tol:
        return None
    if not pair.p.approx_eq(LaurentPoly.constant(pair.variables, c0), tol):
        return None
    if not pair.q.is_zero(tol):
        return None
    return cmath.phase(c0)


def decide(pair: PQPair, n: int, tol: float = EPS) -> bool:
    """True iff the pair is constructible in exactly ``n`` steps."""
    return run_decision(pair, n, tol).accepted


def synthesize(pair: PQPair, n: int, tol: float = EPS) -> SynthesisResult:
    """Decide, and on acceptance assemble angle and index parameters.

    Parameters are filled from the tail of the sequence inward, mirroring
    the trace: an identity padding occupies the two trailing positions of
    the current window (phases +pi/2 then -pi/2 on variable 1), a peeled
    factor occupies the trailing position with its matched phase, and the
    base case fixes phi_0.  The realized sequence always has exactly ``n``
    steps and reproduces the pair; it is one valid choice, not a canonical
    one.
    """
    trace = run_decision(pair, n, tol)
    if not trace.accepted:
        return SynthesisResult(False, None, trace)
    phases = [0.0] * (n + 1)
    indices = [0] * n
    t = n
    for step in trace.steps:
        if isinstance(step, IdentityPad):
            phases[t - 1] = math.pi / 2.0
            phases[t] = -math.pi / 2.0
            indices[t - 2] = 1
            indices[t - 1] = 1
            t -= 2
        elif isinstance(step, PhaseReduction):
            phases[t] = step.phase
            indices[t - 1] = step.index
            t -= 1
        else:
            phases[0] = step.phase0
    sequence = MqspSequence(pair.variables, tuple(phases), tuple(indices))
    return SynthesisResult(True, sequence, trace)


def check_necessary(pair: PQPair, n: int, tol: float = EPS) -> NecessaryReport:
    """Run every rejection filter, without short-circuiting.

    Checks the inversion symmetries P(a^{-1}) = P(a) and Q(a^{-1}) = -Q(a),
    per-variable degree equality of P and Q, P != 0, matching parity of the
    degree sum and the step count, and the unit-norm identity.
    """
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    p, q = pair.p, pair.q
    degrees = p.degrees()
    total = sum(degrees)
    return NecessaryReport(
        symmetry_p=p.invert_vars().approx_eq(p, tol),
        symmetry_q=q.invert_vars().approx_eq(-q, tol),
        degree_equality=all(
            p.degree(j) == q.degree(j) for j in range(1, pair.variables + 1)
        ),
        p_nonzero=not p.is_zero(tol),
        parity_ok=(total - n) % 2 == 0,
        normalization_ok=pair.is_normalized(tol),
        degrees=degrees,
        degree_sum=total,
        steps=n,
    )


def qsp1_characterize(pair: PQPair, n: int, tol: float = EPS) -> bool:
    """Closed-form constructivity test for single-variable pairs.

    True iff the degrees of P and Q are at most n, P(a^{-1}) = P(a) and
    Q(a^{-1}) = -Q(a), both components pick up the factor (-1)^n under
    a -> -a, and the unit-norm identity holds.  Agrees with ``decide`` on
    every arity-1 input.
    """
    if pair.variables != 1:
        raise ValueError(
            f"single-variable characterization needs arity 1, got {pair.variables}"
        )
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    p, q = pair.p, pair.q
    if p.degree(1) > n or q.degree(1) > n:
        return False
    if not p.invert_vars().approx_eq(p, tol):
        return False
    if not q.invert_vars().approx_eq(-q, tol):
        return False
    sign = -1.0 if n % 2 else 1.0
    if not p.negate_var(1).approx_eq(p * sign, tol):
        return False
    if not q.negate_var(1).approx_eq(q * sign, tol):
        return False
    return pair.is_normalized(tol)


def term_bound(pair: PQPair) -> int:
    """Product over variables of (2 max(deg P, deg Q) + 1): the largest
    number of terms either component can carry at its degrees.  The decision
    runs in O(steps * variables * term_bound)."""
    bound = 1
    for j in range(1, pair.variables + 1):
        bound *= 2 * max(pair.p.degree(j), pair.q.degree(j)) + 1
    return bound
