"""Schrödinger model on polynomial-times-Gaussian functions, the Bargmann
transform with a parameterised kernel, and the intertwining checks."""
from __future__ import annotations

import math
from fractions import Fraction

import sympy as sp

from .fock import ModelParams
from .poly import MultiPoly, monomial_basis
from .scalar import Scalar, _rational_sqrt, as_scalar

HALF = Fraction(1, 2)


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def real_gauss_moment(n: int) -> Scalar:
    """Integral over R of x^n e^{-x^2}."""
    if n % 2:
        return Scalar(0)
    return Scalar.pi(HALF) * Fraction(double_factorial(n - 1), 2 ** (n // 2))


class GaussPoly:
    """p(x) e^{-|x|^2 / 2} on R^r; only p is stored."""

    __slots__ = ("p",)

    def __init__(self, p: MultiPoly):
        self.p = p

    @property
    def r(self) -> int:
        return self.p.nvars

    @classmethod
    def monomial(cls, exps, coef=1, d=None):
        return cls(MultiPoly.monomial(exps, coef, d))

    @classmethod
    def gaussian(cls, r: int):
        return cls(MultiPoly.constant(1, r))

    def __add__(self, other):
        return GaussPoly(self.p + other.p)

    def __sub__(self, other):
        return GaussPoly(self.p - other.p)

    def scale(self, c):
        return GaussPoly(self.p * as_scalar(c))

    def mul_poly(self, q: MultiPoly):
        return GaussPoly(self.p * q)

    def diff(self, i: int):
        """d/dx_i through the Gaussian: (dp/dx_i - x_i p) G."""
        return GaussPoly(self.p.diff(i) - self.p.mul_var(i))

    def is_zero(self):
        return self.p.is_zero()

    def __eq__(self, other):
        return isinstance(other, GaussPoly) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def to_text(self):
        return f"({self.p.to_text('x')})*G"

    __str__ = to_text

    def __repr__(self):
        return f"GaussPoly({self.to_text()!r})"


def l2_pair(f: GaussPoly, g: GaussPoly) -> Scalar:
    """Integral over R^r of f conj(g); the two Gaussians combine to e^{-|x|^2}."""
    total = Scalar(0)
    for ka, va in f.p.terms.items():
        for kb, vb in g.p.terms.items():
            mom = Scalar(1)
            for x, y in zip(ka, kb):
                mom = mom * real_gauss_moment(x + y)
                if mom.is_zero():
                    break
            if not mom.is_zero():
                total = total + va * vb.conjugate() * mom
    return total


def schrodinger_ops(params: ModelParams) -> dict:
    """rho~(E) = k |x|^2,  rho~(F) = k sum d_i^2,  rho~(H) = h + sum x_i d_i."""
    k, h = params.k, params.h_shift

    def E(f):
        return GaussPoly(f.p.rsq_mul() * k)

    def F(f):
        out = GaussPoly(MultiPoly.zero(f.r))
        for i in range(f.r):
            out = out + f.diff(i).diff(i)
        return out.scale(k)

    def H(f):
        out = f.scale(h)
        for i in range(f.r):
            out = out + f.diff(i).mul_poly(MultiPoly.var(i, f.r))
        return out

    return {"H": H, "E": E, "F": F}


def gauss_basis(r: int, cap: int, d=None):
    return [GaussPoly.monomial(m, 1, d) for m in monomial_basis(r, cap)]


def schrodinger_sl2(params: ModelParams, cap: int = 6) -> list[dict]:
    ops = schrodinger_ops(params)
    H, E, F = ops["H"], ops["E"], ops["F"]
    checks = [
        ("[H,E] = 2E", lambda f: H(E(f)) - E(H(f)), lambda f: E(f).scale(2)),
        ("[H,F] = -2F", lambda f: H(F(f)) - F(H(f)), lambda f: F(f).scale(-2)),
        ("[E,F] = kappa H", lambda f: E(F(f)) - F(E(f)), lambda f: H(f).scale(params.kappa)),
    ]
    out = []
    for name, lhs, rhs in checks:
        bad = 0
        first = None
        for f in gauss_basis(params.r, cap, params.d):
            diff = lhs(f) - rhs(f)
            if not diff.is_zero():
                bad += 1
                first = first or {"input": f.to_text(), "residual": diff.to_text()}
        out.append({"identity": name, "rank": params.r, "cap": cap, "failing_inputs": bad,
                    "pass": bad == 0, "offending": first})
    return out


def check_l2_skew(params: ModelParams, cap: int) -> dict:
    """<X f, g> = -<f, X g> for X = rho~(E), rho~(F) on x^a G, x^b G, |a|, |b| <= cap.

    Also reports whether the symmetric relation <X f, g> = <f, X g> holds.
    """
    ops = schrodinger_ops(params)
    basis = gauss_basis(params.r, cap, params.d)
    result = {"rank": params.r, "cap": cap}
    for name in ("E", "F"):
        op = ops[name]
        imgs = [op(f) for f in basis]
        skew_bad = sym_bad = 0
        first = None
        for i, f in enumerate(basis):
            for j, g in enumerate(basis):
                lhs = l2_pair(imgs[i], g)
                rhs = l2_pair(f, imgs[j])
                if lhs != -rhs:
                    skew_bad += 1
                    if first is None:
                        first = {"f": f.to_text(), "g": g.to_text(), "lhs": str(lhs), "rhs": str(-rhs)}
                if lhs != rhs:
                    sym_bad += 1
        result[name] = {"skew_pass": skew_bad == 0, "skew_failures": skew_bad,
                        "symmetric": sym_bad == 0, "offending": first}
    result["pass"] = result["E"]["skew_pass"] and result["F"]["skew_pass"]
    return result


# -- the image class --------------------------------------------------------------

class ExpPoly:
    """(pi/gamma)^{r/2} q(z) e^{lam |z|^2}, with |z|^2 meaning sum z_i^2.

    When gamma is the square of a rational the prefactor is folded into q
    and gamma is stored as 1; otherwise gamma stays symbolic.  Both sides of
    every comparison carry the same gamma.
    """

    __slots__ = ("q", "lam", "gamma")

    def __init__(self, q: MultiPoly, lam, gamma=1):
        self.q = q
        self.lam = as_scalar(lam)
        self.gamma = as_scalar(gamma)

    def _same(self, other):
        if self.lam != other.lam or self.gamma != other.gamma:
            raise ValueError("ExpPoly values with different exponent or prefactor")

    def __add__(self, other):
        if other.q.is_zero():
            return self
        if self.q.is_zero():
            return other
        self._same(other)
        return ExpPoly(self.q + other.q, self.lam, self.gamma)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return ExpPoly(self.q * as_scalar(c), self.lam, self.gamma)

    def diff(self, i: int):
        return ExpPoly(self.q.diff(i) + self.q.mul_var(i) * (self.lam * 2), self.lam, self.gamma)

    def mul_var(self, i: int, power: int = 1):
        return ExpPoly(self.q.mul_var(i, power), self.lam, self.gamma)

    def is_zero(self):
        return self.q.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if self.q.is_zero() or other.q.is_zero():
            return self.q.is_zero() and other.q.is_zero()
        return self.q == other.q and self.lam == other.lam and self.gamma == other.gamma

    def to_text(self):
        pref = "" if self.gamma == 1 else f"(pi/({self.gamma}))^(r/2)*"
        return f"{pref}({self.q.to_text()})*exp(({self.lam})*tau(z^2))"

    __str__ = to_text

    def __repr__(self):
        return f"ExpPoly({self.to_text()!r})"


def fock_ops_exp(params: ModelParams) -> dict:
    """Fock-model rho(H), rho(E), rho(F) extended to ExpPoly."""
    k, h = params.k, params.h_shift

    def E(f):
        return ExpPoly(f.q.rsq_mul() * k, f.lam, f.gamma)

    def F(f):
        out = ExpPoly(MultiPoly.zero(f.q.nvars), f.lam, f.gamma)
        for i in range(f.q.nvars):
            out = out + f.diff(i).diff(i)
        return out.scale(k)

    def H(f):
        out = f.scale(h)
        for i in range(f.q.nvars):
            out = out + f.diff(i).mul_var(i)
        return out

    return {"H": H, "E": E, "F": F}


# -- Bargmann transform --------------------------------------------------------------

class DivergentKernel(ValueError):
    pass


class KernelParams:
    """Kernel e^{a tau(z^2) + b tau(x z) + c0 tau(x^2)}."""

    def __init__(self, a, b, c0):
        self.a, self.b, self.c0 = as_scalar(a), as_scalar(b), as_scalar(c0)
        self._table: list = []

    @property
    def gamma(self) -> Scalar:
        return Scalar(HALF) - self.c0

    @property
    def lam(self) -> Scalar:
        return self.a + self.b * self.b / (self.gamma * 4)

    def as_dict(self):
        return {"a": str(self.a), "b": str(self.b), "c0": str(self.c0)}

    def __repr__(self):
        return f"KernelParams(a={self.a}, b={self.b}, c0={self.c0})"


PAPER_KERNEL = KernelParams(0, 1, Fraction(-1, 2))


def _one_dim_table(kernel: KernelParams, nmax: int):
    """T_n(z) with  int x^n e^{-gamma x^2 + b x z} dx = sqrt(pi/gamma) T_n(z) e^{b^2 z^2/(4 gamma)}.

    Cached on the kernel and extended on demand.
    """
    table = kernel._table
    if len(table) > nmax:
        return table
    g = kernel.gamma
    mu = kernel.b / (g * 2)
    two_g_inv = (g * 2).inverse()
    mu_pow = [Scalar(1)]
    g_pow = [Scalar(1)]
    for _ in range(nmax):
        mu_pow.append(mu_pow[-1] * mu)
        g_pow.append(g_pow[-1] * two_g_inv)
    for n in range(len(table), nmax + 1):
        terms = {}
        for j in range(0, n + 1, 2):
            coef = mu_pow[n - j] * g_pow[j // 2] * (math.comb(n, j) * double_factorial(j - 1))
            if not coef.is_zero():
                terms[(n - j,)] = coef
        table.append(terms)
    return table


def _real_part_positive(x: Scalar) -> bool:
    return x.to_complex().real > 0


def bargmann(kernel: KernelParams, f: GaussPoly) -> ExpPoly:
    r = f.r
    g = kernel.gamma
    if not _real_part_positive(g):
        raise DivergentKernel(f"kernel does not converge: gamma = {g}")
    if kernel.b.is_zero():
        raise DivergentKernel("b = 0 gives a constant transform")
    nmax = max((max(k) for k in f.p.terms), default=0)
    table = _one_dim_table(kernel, nmax)
    pref = Scalar.pi(Fraction(r, 2))
    gamma_out = g
    root = _rational_sqrt(g.as_fraction()) if g.is_rational() else None
    if root is not None:
        pref = pref / Scalar(root) ** r
        gamma_out = Scalar(1)
    out: dict = {}
    for k, v in f.p.terms.items():
        # product over coordinates of T_{k_i}(z_i)
        acc = {(): v * pref}
        for n in k:
            nxt = {}
            for e, c in acc.items():
                for (m,), t in table[n].items():
                    key = e + (m,)
                    val = c * t
                    nxt[key] = nxt[key] + val if key in nxt else val
            acc = nxt
        for key, val in acc.items():
            out[key] = out[key] + val if key in out else val
    return ExpPoly(MultiPoly(r, out), kernel.lam, gamma_out)


# -- the sl2 bridge ---------------------------------------------------------------

class Sl2Bridge:
    """Images of H, E, F as coefficient triples over the ordered basis (H, E, F).

    With F' = F / kappa (so that [E, F'] = H):
        H  -> -eps i (E - F')
        E  ->  eps (i/2) H - (E + F')/2
        F' -> -eps (i/2) H - (E + F')/2
    For kappa = 1 and eps = 1 these are the conjugation formulas by g0.
    """

    def __init__(self, kappa, eps: int = 1, literal: bool = False):
        kappa = as_scalar(kappa)
        self.kappa, self.eps, self.literal = kappa, eps, literal
        i = Scalar.i()
        half = Fraction(1, 2)
        if literal:
            # the printed formulas, read with the unnormalised F
            self.images = {
                "H": (Scalar(0), -i * eps, i * eps),
                "E": (i * eps * half, Scalar(-half), Scalar(-half)),
                "F": (-i * eps * half, Scalar(-half), Scalar(-half)),
            }
        else:
            kinv = kappa.inverse()
            self.images = {
                "H": (Scalar(0), -i * eps, i * eps * kinv),
                "E": (i * eps * half, Scalar(-half), -kinv * half),
                "F": (-i * eps * half * kappa, -kappa * half, Scalar(-half)),
            }

    def bracket(self, x, y):
        """Bracket of two coefficient triples under [H,E]=2E, [H,F]=-2F, [E,F]=kappa H."""
        xh, xe, xf = x
        yh, ye, yf = y
        h = (xe * yf - xf * ye) * self.kappa
        e = (xh * ye - xe * yh) * 2
        f = (xf * yh - xh * yf) * 2
        return (h, e, f)

    def structure_residuals(self) -> dict:
        im = self.images
        unit = {"H": (Scalar(1), Scalar(0), Scalar(0)), "E": (Scalar(0), Scalar(1), Scalar(0)),
                "F": (Scalar(0), Scalar(0), Scalar(1))}
        out = {}
        for (x, y) in (("H", "E"), ("H", "F"), ("E", "F")):
            target = self.bracket(unit[x], unit[y])
            mapped = tuple(Scalar(0) for _ in range(3))
            for coeff, name in zip(target, "HEF"):
                mapped = tuple(m + coeff * c for m, c in zip(mapped, im[name]))
            got = self.bracket(im[x], im[y])
            out[f"[{x},{y}]"] = [str(g - m) for g, m in zip(got, mapped)]
        return out

    def preserves_brackets(self) -> bool:
        return all(all(v == "0" for v in res) for res in self.structure_residuals().values())

    def real_form_identity(self) -> bool:
        """[E+F, i(E-F)] = -2 i kappa H, i.e. ((r-1)/2) i H."""
        i = Scalar.i()
        ef = (Scalar(0), Scalar(1), Scalar(1))
        iemf = (Scalar(0), i, -i)
        return self.bracket(ef, iemf) == (i * self.kappa * -2, Scalar(0), Scalar(0))


def apply_combo(ops: dict, coeffs, f):
    out = None
    for c, name in zip(coeffs, "HEF"):
        if c.is_zero():
            continue
        term = ops[name](f).scale(c)
        out = term if out is None else out + term
    if out is None:
        return f.scale(0)
    return out


def check_intertwine(params: ModelParams, kernel: KernelParams, cap: int, bridge: Sl2Bridge | None = None):
    """B(rho~(X) f) - rho(bridge(X)) (B f) for f = x^a G, |a| <= cap, X in {H, E, F}."""
    if bridge is None:
        bridge = Sl2Bridge(params.kappa)
    sch = schrodinger_ops(params)
    fock = fock_ops_exp(params)
    basis = gauss_basis(params.r, cap, params.d)
    images = {f: bargmann(kernel, f) for f in basis}
    per_x = {}
    for name in "HEF":
        residuals = []
        for f in basis:
            lhs = bargmann(kernel, sch[name](f))
            rhs = apply_combo(fock, bridge.images[name], images[f])
            diff = lhs - rhs
            if not diff.is_zero():
                residuals.append({"input": f.to_text(), "residual": diff.to_text()})
        per_x[name] = {"X": name, "failing_inputs": len(residuals), "pass": not residuals,
                       "residual_polys": residuals[:3]}
    return {"rank": params.r, "kernel_params": kernel.as_dict(), "basis_cap": cap,
            "bridge_sign": bridge.eps, "bridge_literal": bridge.literal,
            "per_operator": per_x, "pass": all(v["pass"] for v in per_x.values())}


# -- symbolic solver ---------------------------------------------------------------
# One coordinate suffices: every operator is a sum over coordinates of the same
# one-variable operator, and the constant shift r/2 splits as 1/2 per coordinate.

def scalar_to_sympy(x: Scalar):
    total = sp.Integer(0)
    for (p, e), (re_, im) in x.terms.items():
        term = (sp.Rational(re_.numerator, re_.denominator)
                + sp.I * sp.Rational(im.numerator, im.denominator))
        if p:
            term *= sp.pi ** sp.Rational(p.numerator, p.denominator)
        if e:
            term *= sp.sqrt(sp.Rational(x.d.numerator, x.d.denominator))
        total += term
    return total


class NotRepresentable(ValueError):
    pass


def sympy_to_scalar(expr) -> Scalar:
    """Convert a + b sqrt(q) (a, b Gaussian rational, one radicand) to Scalar."""
    expr = sp.nsimplify(sp.expand(expr))
    total = Scalar(0)
    for term in sp.Add.make_args(expr):
        coef, rest = term.as_coeff_Mul()
        unit = Scalar(1)
        if rest.has(sp.I):
            rest = rest / sp.I
            unit = Scalar.i()
        rest = sp.nsimplify(rest)
        if rest == 1:
            val = Scalar(Fraction(int(coef.p), int(coef.q)) if coef.is_Rational else _exact(coef))
        else:
            sq = sp.nsimplify(rest ** 2)
            if not sq.is_Rational:
                raise NotRepresentable(f"cannot represent {term}")
            val = Scalar.s(Fraction(int(sq.p), int(sq.q))) * _exact(coef)
        total = total + val * unit
    return total


def _exact(c) -> Fraction:
    c = sp.nsimplify(c)
    if not c.is_Rational:
        raise NotRepresentable(f"non-rational coefficient {c}")
    return Fraction(int(c.p), int(c.q))


def _wmul(A: dict, B: dict) -> dict:
    """Product of normal-ordered Weyl-algebra elements z^i d^j."""
    out: dict = {}
    for (a, b), x in A.items():
        for (c, d), y in B.items():
            for k in range(min(b, c) + 1):
                co = math.comb(b, k) * math.factorial(c) // math.factorial(c - k)
                key = (a + c - k, b + d - k)
                out[key] = out.get(key, 0) + x * y * co
    return {k: v for k, v in ((k, sp.expand(v)) for k, v in out.items()) if v != 0}


def _wadd(*pairs) -> dict:
    out: dict = {}
    for c, A in pairs:
        for k, v in A.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in ((k, sp.expand(v)) for k, v in out.items()) if v != 0}


def intertwining_equations(params: ModelParams, bridge_images: dict):
    """Polynomial equations in (a, b, c0) for exact intertwining, one coordinate.

    ``bridge_images`` maps H, E, F to sympy coefficient triples over (H, E, F).
    """
    a, b, c0 = sp.symbols("a b c0")
    k = scalar_to_sympy(params.k)
    half = sp.Rational(1, 2)
    Z, D, ONE = {(1, 0): 1}, {(0, 1): 1}, {(0, 0): 1}
    # transferred position and derivative: B x = Xh B, B d_x = Dh B
    Xh = _wadd((1 / b, D), (-2 * a / b, Z))
    Dh = _wadd((-b, Z), (-2 * c0 / b, D), (4 * a * c0 / b, Z))
    transferred = {
        "H": _wadd((half, ONE), (1, _wmul(Xh, Dh))),
        "E": _wadd((k, _wmul(Xh, Xh))),
        "F": _wadd((k, _wmul(Dh, Dh))),
    }
    fock = {
        "H": _wadd((half, ONE), (1, _wmul(Z, D))),
        "E": _wadd((k, _wmul(Z, Z))),
        "F": _wadd((k, _wmul(D, D))),
    }
    eqs = []
    for name in "HEF":
        coeffs = bridge_images[name]
        target = _wadd(*[(c, fock[n]) for c, n in zip(coeffs, "HEF")])
        res = _wadd((1, transferred[name]), (-1, target))
        eqs.extend(sp.numer(sp.together(v)) for v in res.values())
    return eqs, (a, b, c0)


def bridge_to_sympy(bridge: Sl2Bridge) -> dict:
    return {n: tuple(scalar_to_sympy(c) for c in bridge.images[n]) for n in "HEF"}


def solve_kernels(params: ModelParams, bridge: Sl2Bridge) -> list[dict]:
    """All (a, b, c0) with b != 0 that intertwine exactly for the given bridge."""
    eqs, (a, b, c0) = intertwining_equations(params, bridge_to_sympy(bridge))
    eqs = [e for e in eqs if e != 0]
    sols = sp.solve(eqs, [a, b, c0], dict=True) if eqs else []
    out = []
    for s in sols:
        if not all(v in s for v in (a, b, c0)) or s[b] == 0:
            continue
        rec = {"a": s[a], "b": s[b], "c0": s[c0]}
        try:
            rec["kernel"] = KernelParams(sympy_to_scalar(s[a]), sympy_to_scalar(s[b]), sympy_to_scalar(s[c0]))
        except NotRepresentable:
            rec["kernel"] = None
        out.append(rec)
    out.sort(key=lambda s: (str(s["a"]), str(s["b"]), str(s["c0"])))
    return out


def solve_and_verify(params: ModelParams, cap: int = 8) -> dict:
    """Search both bridge signs; re-verify every convergent solution exactly."""
    found = []
    for eps in (1, -1):
        bridge = Sl2Bridge(params.kappa, eps)
        for sol in solve_kernels(params, bridge):
            kern = sol["kernel"]
            entry = {"bridge_sign": eps, "a": str(sol["a"]), "b": str(sol["b"]), "c0": str(sol["c0"])}
            if kern is None:
                entry.update(convergent=None, verified=None, note="outside the exact scalar ring")
            elif not _real_part_positive(kern.gamma):
                entry.update(convergent=False, verified=None, note=f"gamma = {kern.gamma}: integral diverges")
            else:
                rep = check_intertwine(params, kern, cap, bridge)
                entry.update(convergent=True, verified=rep["pass"], lam=str(kern.lam),
                             gamma=str(kern.gamma), kernel_params=kern.as_dict())
            found.append(entry)
    return {"rank": params.r, "solutions": found,
            "verified_solutions": [s for s in found if s.get("verified")]}


def printed_golden_operators() -> dict:
    """The rank-one operator formulas exactly as printed, as (const, euler, z^2, d^2) tuples."""
    i = Scalar.i()
    q = Fraction(1, 4)
    return {
        "AdE": (-i * HALF, -i, -i * q, -i * q),
        "AdF": (i * HALF, i, -i * q, -i * q),
        "AdH": (Scalar(0), Scalar(0), Scalar(HALF), Scalar(-HALF)),
        "E+F": (Scalar(0), Scalar(0), i * HALF, i * HALF),
        "i(E-F)": (Scalar(0), Scalar(0), Scalar(-HALF), Scalar(HALF)),
        "iH": (i * HALF, i, Scalar(0), Scalar(0)),
    }


def machine_golden_operators() -> dict:
    """The same operators assembled from rank-one rho(H), rho(E), rho(F)."""
    p = ModelParams(1)
    i = Scalar.i()
    k, h = p.k, p.h_shift
    zero = Scalar(0)
    Hop = (h, Scalar(1), zero, zero)
    Eop = (zero, zero, k, zero)
    Fop = (zero, zero, zero, k)

    def combo(*pairs):
        out = [Scalar(0)] * 4
        for c, op in pairs:
            out = [o + c * x for o, x in zip(out, op)]
        return tuple(out)

    bridge = Sl2Bridge(1)
    return {
        "AdE": combo(*zip(bridge.images["E"], (Hop, Eop, Fop))),
        "AdF": combo(*zip(bridge.images["F"], (Hop, Eop, Fop))),
        "AdH": combo(*zip(bridge.images["H"], (Hop, Eop, Fop))),
        "E+F": combo((Scalar(1), Eop), (Scalar(1), Fop)),
        "i(E-F)": combo((i, Eop), (-i, Fop)),
        "iH": combo((i, Hop)),
    }


def oscillator_apply(coeffs, f: MultiPoly) -> MultiPoly:
    """f -> c0 f + c1 Eu f + c2 z^2 f + c3 f'' for a one-variable polynomial."""
    c0, c1, c2, c3 = coeffs
    return f * c0 + f.euler() * c1 + f.rsq_mul() * c2 + f.laplace() * c3


def oscillator_brackets(ops: dict, cap: int = 6) -> dict:
    """Residual counts of [AdH, AdE] = 2 AdE, [AdH, AdF] = -2 AdF, [AdE, AdF] = AdH."""
    basis = [MultiPoly.monomial((k,)) for k in range(cap + 1)]

    def br(x, y, f):
        return oscillator_apply(ops[x], oscillator_apply(ops[y], f)) - \
            oscillator_apply(ops[y], oscillator_apply(ops[x], f))

    rels = {
        "[AdH,AdE] = 2 AdE": lambda f: br("AdH", "AdE", f) - oscillator_apply(ops["AdE"], f) * 2,
        "[AdH,AdF] = -2 AdF": lambda f: br("AdH", "AdF", f) + oscillator_apply(ops["AdF"], f) * 2,
        "[AdE,AdF] = AdH": lambda f: br("AdE", "AdF", f) - oscillator_apply(ops["AdH"], f),
    }
    return {name: sum(1 for f in basis if not rel(f).is_zero()) for name, rel in rels.items()}
