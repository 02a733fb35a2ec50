"""Fock-model operators on polynomials on C^r and the sl2 identity checks."""
from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly, monomial_basis, monomials
from .scalar import Scalar, as_scalar


class ModelParams:
    """Constants of the model for rank r.

    For r >= 2: alpha = (r-1)/4, c = i s / 2 with s^2 = r-1, so the E/F
    prefactor (i/2)c equals -s/4 and [E, F] = ((1-r)/4) H.  Rank one uses the
    sl(2, R) conventions instead: prefactor i/2, rho(H) = 1/2 + Euler and
    [E, F] = H.
    """

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("rank must be positive")
        self.r = r
        self.d = Fraction(r - 1)
        i = Scalar.i(self.d)
        if r == 1:
            self.s = Scalar(0, self.d)
            self.alpha = Scalar(Fraction(-1, 2))
            self.c = Scalar(1)
            self.k = i * Fraction(1, 2)
            self.h_shift = Scalar(Fraction(1, 2))
            self.kappa = Scalar(1)
        else:
            self.s = Scalar.s(self.d)
            self.alpha = Scalar(Fraction(r - 1, 4))
            self.c = i * self.s * Fraction(1, 2)
            self.k = i * Fraction(1, 2) * self.c
            # 2 alpha r / (r - 1)
            self.h_shift = self.alpha * 2 * r / (r - 1)
            self.kappa = Scalar(Fraction(1 - r, 4))
        self.form_prefactor = -self.s * Fraction(1, 4)

    @classmethod
    def statement_constants(cls, r: int) -> "ModelParams":
        """alpha = 1/2, c = s/2: the constants quoted with the lemma statement."""
        p = cls(r)
        if r >= 2:
            p.alpha = Scalar(Fraction(1, 2))
            p.c = p.s * Fraction(1, 2)
            p.k = Scalar.i(p.d) * Fraction(1, 2) * p.c
            p.h_shift = p.alpha * 2 * r / (r - 1)
        return p

    def __repr__(self):
        return f"ModelParams(r={self.r}, k={self.k}, h={self.h_shift}, kappa={self.kappa})"


class GradedOperator:
    """Linear map on polynomials that shifts the total degree by a fixed amount."""

    def __init__(self, shift: int, action, name: str = "op"):
        self.shift = shift
        self.action = action
        self.name = name

    def __call__(self, phi):
        return self.action(phi)

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(self.shift + other.shift, lambda f: self(other(f)), f"{self.name}{other.name}")

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        if other.shift != self.shift:
            raise ValueError("sum of operators with different degree shifts is not graded")
        return GradedOperator(self.shift, lambda f: self(f) + other(f), f"({self.name}+{other.name})")

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        if other.shift != self.shift:
            raise ValueError("difference of operators with different degree shifts is not graded")
        return GradedOperator(self.shift, lambda f: self(f) - other(f), f"({self.name}-{other.name})")

    def scale(self, c) -> "GradedOperator":
        c = as_scalar(c)
        return GradedOperator(self.shift, lambda f: self(f) * c, f"{c}*{self.name}")

    def matrix(self, nvars: int, deg: int):
        """Exact matrix from degree ``deg`` monomials to degree ``deg + shift`` ones."""
        src = list(monomials(nvars, deg))
        tgt_deg = deg + self.shift
        tgt = list(monomials(nvars, tgt_deg)) if tgt_deg >= 0 else []
        index = {m: i for i, m in enumerate(tgt)}
        mat = [[Scalar(0)] * len(src) for _ in tgt]
        for j, m in enumerate(src):
            img = self(MultiPoly.monomial(m))
            for k, v in img.terms.items():
                if k not in index:
                    raise ValueError(f"{self.name} is not homogeneous of shift {self.shift}")
                mat[index[k]][j] = v
        return src, tgt, mat


def commutator(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    return GradedOperator(a.shift + b.shift, lambda f: a(b(f)) - b(a(f)), f"[{a.name},{b.name}]")


def identity_op() -> GradedOperator:
    return GradedOperator(0, lambda f: f, "1")


def euler_op() -> GradedOperator:
    return GradedOperator(0, lambda f: f.euler(), "Eu")


def rsq_op() -> GradedOperator:
    return GradedOperator(2, lambda f: f.rsq_mul(), "tau(z^2)")


def laplace_op() -> GradedOperator:
    return GradedOperator(-2, lambda f: f.laplace(), "tau(d^2)")


def rho_H(params: ModelParams, phi: MultiPoly) -> MultiPoly:
    return phi * params.h_shift + phi.euler()


def rho_E(params: ModelParams, phi: MultiPoly) -> MultiPoly:
    return phi.rsq_mul() * params.k


def rho_F(params: ModelParams, phi: MultiPoly) -> MultiPoly:
    return phi.laplace() * params.k


def _form_mul(weights, phi: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(phi.nvars, phi.d)
    for i, w in enumerate(weights):
        w = as_scalar(w)
        if not w.is_zero():
            out = out + phi.mul_var(i, 2) * w
    return out


def _form_diff(weights, phi: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(phi.nvars, phi.d)
    for i, w in enumerate(weights):
        w = as_scalar(w)
        if not w.is_zero():
            out = out + phi.diff(i).diff(i) * w
    return out


def rho_linear_form(params: ModelParams, weights, phi: MultiPoly) -> MultiPoly:
    """rho(p) phi = -(s/4) p(z^2) phi, with p(z^2) = sum w_i z_i^2."""
    return _form_mul(weights, phi) * params.form_prefactor


def rho_linear_form_sigma(params: ModelParams, weights, phi: MultiPoly) -> MultiPoly:
    """rho(p^sigma) phi = -(s/4) p(d^2) phi."""
    return _form_diff(weights, phi) * params.form_prefactor


def operators(params: ModelParams) -> dict:
    return {
        "H": GradedOperator(0, lambda f: rho_H(params, f), "rhoH"),
        "E": GradedOperator(2, lambda f: rho_E(params, f), "rhoE"),
        "F": GradedOperator(-2, lambda f: rho_F(params, f), "rhoF"),
    }


def form_operators(params: ModelParams, weights) -> dict:
    return {
        "p": GradedOperator(2, lambda f: rho_linear_form(params, weights, f), "rho(p)"),
        "p_sigma": GradedOperator(-2, lambda f: rho_linear_form_sigma(params, weights, f), "rho(p^s)"),
    }


def dilate(phi: MultiPoly, lam) -> MultiPoly:
    """(D phi)(z) = phi(lambda z)."""
    lam = as_scalar(lam)
    return MultiPoly(phi.nvars, {k: v * lam ** sum(k) for k, v in phi.terms.items()}, phi.d)


def basis_polys(nvars: int, max_deg: int, d=None):
    return [MultiPoly.monomial(m, 1, d) for m in monomial_basis(nvars, max_deg)]


def compare_on_basis(lhs: GradedOperator, rhs: GradedOperator, basis) -> dict:
    """Residual summary of lhs - rhs over the basis."""
    residual_terms = 0
    offending = None
    for f in basis:
        diff = lhs(f) - rhs(f)
        if not diff.is_zero():
            residual_terms += len(diff)
            if offending is None:
                offending = {"input": f.to_text(), "residual": diff.to_text()}
    return {"residual_terms": residual_terms, "pass": residual_terms == 0, "offending": offending}


def sl2_identities(params: ModelParams):
    """Pairs (name, lhs, rhs) for the three brackets and the three auxiliary identities."""
    ops = operators(params)
    H, E, F = ops["H"], ops["E"], ops["F"]
    r = params.r
    one = identity_op()
    eu = euler_op()
    rsq, lap = rsq_op(), laplace_op()
    return [
        ("[rhoH,rhoE] = 2 rhoE", commutator(H, E), E.scale(2)),
        ("[rhoH,rhoF] = -2 rhoF", commutator(H, F), F.scale(-2)),
        ("[rhoE,rhoF] = kappa rhoH", commutator(E, F), H.scale(params.kappa)),
        ("tau(z^2)tau(d^2) - tau(d^2)tau(z^2) = -2r - 4 Eu",
         commutator(rsq, lap), one.scale(-2 * r) - eu.scale(4)),
        ("[Eu, tau(z^2)] = 2 tau(z^2)", commutator(eu, rsq), rsq.scale(2)),
        ("[Eu, tau(d^2)] = -2 tau(d^2)", commutator(eu, lap), lap.scale(-2)),
    ]


def verify_sl2(params: ModelParams, max_degree: int = 6) -> list[dict]:
    if max_degree < 2:
        raise ValueError("degree cap must be at least 2")
    basis = basis_polys(params.r, max_degree, params.d)
    records = []
    for name, lhs, rhs in sl2_identities(params):
        res = compare_on_basis(lhs, rhs, basis)
        records.append({"identity": name, "rank": params.r, "degree_cap": max_degree, **res})
    return records


def verify_form_equivariance(params: ModelParams, weights, max_degree: int = 6) -> list[dict]:
    H = operators(params)["H"]
    fo = form_operators(params, weights)
    basis = basis_polys(params.r, max_degree, params.d)
    out = []
    for name, lhs, rhs in [
        ("[rhoH, rho(p)] = 2 rho(p)", commutator(H, fo["p"]), fo["p"].scale(2)),
        ("[rhoH, rho(p^sigma)] = -2 rho(p^sigma)", commutator(H, fo["p_sigma"]), fo["p_sigma"].scale(-2)),
    ]:
        out.append({"identity": name, "rank": params.r, "degree_cap": max_degree,
                    **compare_on_basis(lhs, rhs, basis)})
    return out


def parity_preserved(op: GradedOperator, basis) -> bool:
    for f in basis:
        parity = f.total_degree() % 2
        if any(deg % 2 != parity for deg in op(f).degrees()):
            return False
    return True


def dilation_covariance(params: ModelParams, lam, max_degree: int = 6) -> bool:
    """D rhoE D^{-1} = lambda^2 rhoE, with (D phi)(z) = phi(lambda z)."""
    lam = as_scalar(lam)
    inv = lam.inverse()
    for f in basis_polys(params.r, max_degree, params.d):
        lhs = dilate(rho_E(params, dilate(f, inv)), lam)
        if lhs != rho_E(params, f) * (lam * lam):
            return False
    return True


def tau_matches_E(params: ModelParams, max_degree: int = 4) -> bool:
    """rho(tau) coincides with rho(E) (both carry the prefactor -s/4)."""
    w = [1] * params.r
    return all(rho_linear_form(params, w, f) == rho_E(params, f)
               for f in basis_polys(params.r, max_degree, params.d))
