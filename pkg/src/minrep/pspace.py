"""The module spanned by translates of Q = Delta^2, its grading, and the
inversion and dilation actions on it."""
from __future__ import annotations

import json
import random
from fractions import Fraction

from .jordan import AlgebraDescriptor
from .linalg import EchelonBasis
from .poly import LaurentPoly, MultiPoly
from .scalar import Scalar, as_scalar


class RankNotStable(RuntimeError):
    pass


def q_poly(algebra: AlgebraDescriptor) -> MultiPoly:
    dlt = algebra.delta_poly()
    return dlt * dlt


class PSpace:
    def __init__(self, algebra, basis, grading, seed, samples_used):
        self.algebra = algebra
        self.basis = basis
        self.grading = grading  # degree -> list of homogeneous MultiPoly
        self.seed = seed
        self.samples_used = samples_used

    @property
    def dim(self) -> int:
        return len(self.basis)

    def grading_dims(self) -> dict:
        return {deg: len(v) for deg, v in sorted(self.grading.items())}

    def contains(self, p: MultiPoly) -> bool:
        eb = EchelonBasis()
        for b in self.basis:
            eb.add(b.terms)
        return eb.contains(dict(p.terms))

    def to_json(self) -> str:
        return json.dumps({
            "family": self.algebra.family,
            "r": self.algebra.r,
            "n": self.algebra.n,
            "seed": self.seed,
            "basis": [b.to_text() for b in self.basis],
            "grading_dims": {str(k): v for k, v in self.grading_dims().items()},
        }, sort_keys=True)


def build_pspace(algebra: AlgebraDescriptor, seed: int = 0, window: int = 5,
                 budget: int = 400, spread: int = 3) -> PSpace:
    """Span of Q(z - a) over seeded small-integer points a.

    Sampling stops once ``window`` consecutive samples leave the rank
    unchanged; exceeding ``budget`` samples is an error.
    """
    if algebra.r > 3:
        raise ValueError("build_pspace supports r <= 3")
    rng = random.Random(seed)
    dlt = algebra.delta_poly()
    eb = EchelonBasis()
    basis = []
    steady = 0
    used = 0
    while steady < window:
        if used >= budget:
            raise RankNotStable(f"rank still growing after {budget} samples")
        a = [rng.randint(-spread, spread) for _ in range(algebra.n)]
        used += 1
        # Q(z - a) = Delta(z - a)^2; translating Delta first is much cheaper
        dt = dlt.translate(a)
        t = dt * dt
        if eb.add(dict(t.terms)):
            basis.append(t)
            steady = 0
        else:
            steady += 1

    grading: dict = {}
    reducers: dict = {}
    for b in basis:
        for deg, part in b.homogeneous_parts().items():
            red = reducers.setdefault(deg, EchelonBasis())
            if red.add(dict(part.terms)):
                grading.setdefault(deg, []).append(part)
    return PSpace(algebra, basis, dict(sorted(grading.items())), seed, used)


def kappa_sigma(p: MultiPoly, algebra: AlgebraDescriptor) -> MultiPoly:
    """(kappa(sigma) p)(z) = Q(z) p(-z^{-1}), with all denominators cleared.

    Each homogeneous part p_d contributes Delta^{2-d} p_d(-adj z); for d > 2
    the power of Delta is removed by exact division.
    """
    if p.nvars != algebra.n:
        raise ValueError("polynomial does not live on this algebra")
    dlt = algebra.delta_poly(p.d)
    adj = algebra.adjugate_poly(p.d)
    subs = [-adj[i][j] for (i, j) in algebra.pairs]
    total = MultiPoly.zero(algebra.n, p.d)
    for deg, part in p.homogeneous_parts().items():
        img = part.compose(subs)
        if deg <= 2:
            img = img * (dlt ** (2 - deg))
        else:
            img = img.divide_exact(dlt ** (deg - 2))
        total = total + img
    return total


def kappa_dilation(lam, p: MultiPoly, algebra: AlgebraDescriptor) -> MultiPoly:
    """(kappa(l_lambda) p)(z) = lambda^r p(z / lambda)."""
    lam = as_scalar(lam)
    if lam.is_zero():
        raise ValueError("dilation by zero")
    r = algebra.r
    out = {}
    for k, v in p.terms.items():
        out[k] = v * lam ** (r - sum(k))
    return MultiPoly(p.nvars, out, p.d)


def tau(algebra: AlgebraDescriptor) -> MultiPoly:
    return algebra.trace_poly()


def tau_sigma(algebra: AlgebraDescriptor) -> MultiPoly:
    return kappa_sigma(tau(algebra), algebra)


def pi_sigma(phi: LaurentPoly) -> LaurentPoly:
    """phi(P(a)) -> phi(P(a^{-1})) in the diagonal coordinates."""
    return phi.substitute_inverse()


class LambdaTerms:
    """A finite sum lambda^e * (Laurent polynomial), keyed by the exponent e."""

    def __init__(self, parts: dict):
        self.parts = {Fraction(e): p for e, p in parts.items() if not p.is_zero()}

    def __eq__(self, other):
        return isinstance(other, LambdaTerms) and self.parts == other.parts

    def __repr__(self):
        return " + ".join(f"lambda^({e})*[{p}]" for e, p in sorted(self.parts.items())) or "0"


def _dilate(phi: LaurentPoly, r: int, alpha, shift_sign: int) -> LambdaTerms:
    # f(a) -> lambda^{r alpha} f(lambda^{shift_sign (r-1)/2} a), split by lambda power
    alpha = Fraction(alpha)
    half = Fraction(r - 1, 2) * shift_sign
    parts: dict = {}
    for k, v in phi.terms.items():
        e = r * alpha + half * sum(k)
        parts.setdefault(e, {})[k] = v
    return LambdaTerms({e: LaurentPoly(phi.nvars, t, phi.d) for e, t in parts.items()})


def pi_alpha_dilation(phi: LaurentPoly, r: int, alpha) -> LambdaTerms:
    return _dilate(phi, r, alpha, 1)


def pi_alpha_sigma_dilation(phi: LaurentPoly, r: int, alpha) -> LambdaTerms:
    return _dilate(phi, r, alpha, -1)


def intertwining_sides(phi: LaurentPoly, r: int, alpha):
    """Both composites pi_sigma o pi_alpha(l) and pi_alpha^sigma(l) o pi_sigma."""
    left = pi_alpha_dilation(phi, r, alpha)
    left = LambdaTerms({e: pi_sigma(p) for e, p in left.parts.items()})
    right = pi_alpha_sigma_dilation(pi_sigma(phi), r, alpha)
    return left, right


def translate_closure(space: PSpace, shifts) -> bool:
    eb = EchelonBasis()
    for b in space.basis:
        eb.add(b.terms)
    for a in shifts:
        for b in space.basis:
            if not eb.contains(dict(b.translate(a).terms)):
                return False
    return True


def derivative_closure(space: PSpace) -> bool:
    """Every partial derivative of every graded piece stays in the span.

    For a finite-dimensional space of polynomials this is equivalent to
    closure under all translations, and far cheaper to test.
    """
    reducers = {}
    for deg, parts in space.grading.items():
        eb = reducers[deg] = EchelonBasis()
        for g in parts:
            eb.add(dict(g.terms))
    for deg, parts in space.grading.items():
        for g in parts:
            for i in range(g.nvars):
                dg = g.diff(i)
                if dg.is_zero():
                    continue
                eb = reducers.get(deg - 1)
                if eb is None or not eb.contains(dict(dg.terms)):
                    return False
    return True


def involution_holds(space: PSpace) -> bool:
    """kappa(sigma)^2 = 1, tested on the graded pieces (they span the space)."""
    alg = space.algebra
    return all(kappa_sigma(kappa_sigma(g, alg), alg) == g
               for parts in space.grading.values() for g in parts)


def scalar(x) -> Scalar:
    return as_scalar(x)
