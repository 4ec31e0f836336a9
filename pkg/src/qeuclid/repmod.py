"""Explicit simple modules at a root of unity: parameters and matrices.

A module instance is determined by (m, k, n), the eigenvalue of x_1 on
the seed vector, the central values of x_i^m (i >= 2) and y_i^m, and the
eigenvalues of the omega_i on the seed.  The basis is indexed by tuples
a = (a_2, ..., a_n) in (Z/mZ)^(n-1) and every generator acts by scale-
and-shift on that index lattice, so each generator matrix is monomial.

Case bookkeeping follows the zero pattern of the central values:
I = {i >= 2 : alpha_i = 0} (those basis directions are built with y_i
instead of x_i) and J = {i >= 2 : beta_i = 0}; tag I/II/III according to
whether I, respectively I  intersect J, is empty.

Two consistency facts are enforced on the parameters because the action
formulas force them (both follow from commuting a generator past the
seed annihilators; the verification suite fails loudly if either is
violated):

* for i in I the seed omega-eigenvalue is pinned:
  lambda_i = q^(-2) * lambda_(i-1);
* for i not in I the central value of y_i^m is pinned:
  beta_i = alpha_i^(-1) * (1-q^(-2))^(-m) * (lambda_i^m - lambda_(i-1)^m);
  configured values there are reported, never consumed.
"""

from __future__ import annotations

import random
from math import gcd

from .linalg import CycMatrix
from .rewriter import all_gens, gen_index, gen_name, is_x, root_domain, xgen, ygen
from .scalars import Cyclotomic, encode_cyclotomic, parse_cyclotomic

DEFAULT_MAX_DIM = 512


class ParamError(ValueError):
    """Invalid or inconsistent module parameters."""


class GuardError(RuntimeError):
    """A configured resource guard was exceeded."""


class CaseTag:
    """Case I/II/III with the index sets that decide it."""

    __slots__ = ("tag", "I_set", "J_set")

    def __init__(self, tag, I_set, J_set):
        self.tag = tag
        self.I_set = frozenset(I_set)
        self.J_set = frozenset(J_set)

    def __repr__(self):
        return (f"CaseTag({self.tag}, I={sorted(self.I_set)}, "
                f"J={sorted(self.J_set)})")

    def __eq__(self, other):
        return (isinstance(other, CaseTag) and self.tag == other.tag
                and self.I_set == other.I_set and self.J_set == other.J_set)


class ModuleParams:
    """One simple-module instance over Q(zeta_m) at q = zeta_m^k.

    alpha/beta are indexed 2..n, lam 1..n; use the *_i accessors.
    """

    def __init__(self, m, k, n, alpha1, alpha, beta, lam,
                 max_dim=DEFAULT_MAX_DIM):
        if m < 3 or m % 2 == 0:
            raise ParamError("m must be odd >= 3")
        if gcd(k, m) != 1:
            raise ParamError("q not primitive")
        if n < 2:
            raise ParamError("n must be >= 2")
        if len(alpha) != n - 1 or len(beta) != n - 1:
            raise ParamError("alpha and beta must have entries for i = 2..n")
        if len(lam) != n:
            raise ParamError("lambda must have entries for i = 1..n")
        self.m = m
        self.k = k % m
        self.n = n
        self.domain = root_domain(m, k)
        self.alpha1 = alpha1
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)
        self.lam = tuple(lam)
        self.max_dim = max_dim
        if any(v.is_zero() for v in self.lam):
            raise ParamError("torsion parameters")
        if alpha1.is_zero():
            raise ParamError("unsupported: x_1 not invertible on v")
        self.I_set = frozenset(i for i in range(2, n + 1)
                               if self.alpha_i(i).is_zero())
        self.J_set = frozenset(i for i in range(2, n + 1)
                               if self.beta_i(i).is_zero())
        qm2 = self.domain.q_pow(-2)
        for i in sorted(self.I_set):
            if self.lam_i(i) != qm2 * self.lam_i(i - 1):
                raise ParamError(
                    f"inconsistent lambda_{i}: for i in I the seed forces "
                    f"lambda_{i} = q^-2 * lambda_{i - 1}")
        # cached constants used by every action coefficient
        self.inv_correction = self.domain.correction.inv()
        self._inv_q2_minus_1 = (self.domain.q_pow(2) - self.domain.one).inv()
        self._alpha1_inv = alpha1.inv()

    def alpha_i(self, i: int) -> Cyclotomic:
        return self.alpha[i - 2]

    def beta_i(self, i: int) -> Cyclotomic:
        return self.beta[i - 2]

    def lam_i(self, i: int) -> Cyclotomic:
        return self.lam[i - 1]

    def derived_beta(self, i: int) -> Cyclotomic:
        """The value y_i^m must take for i outside I (forced by the action)."""
        if i in self.I_set:
            raise ValueError(f"beta_{i} is a free parameter (i in I)")
        diff = self.lam_i(i) ** self.m - self.lam_i(i - 1) ** self.m
        return self.alpha_i(i).inv() * self.inv_correction ** self.m * diff

    def derived_beta1(self) -> Cyclotomic:
        """The value y_1^m takes (never configured; index 1 has no beta)."""
        return (self._alpha1_inv * self.lam_i(1) * self.inv_correction) ** self.m

    # -- wire form ----------------------------------------------------------

    def to_wire(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "alpha1": encode_cyclotomic(self.alpha1),
            "alpha": [encode_cyclotomic(v) for v in self.alpha],
            "beta": [encode_cyclotomic(v) for v in self.beta],
            "lambda": [encode_cyclotomic(v) for v in self.lam],
        }

    @classmethod
    def from_config(cls, cfg: dict, max_dim=DEFAULT_MAX_DIM) -> "ModuleParams":
        """Build from a parsed JSON config with field-precise errors."""
        for key in ("m", "k", "n", "alpha1", "alpha", "beta", "lambda"):
            if key not in cfg:
                raise ParamError(f"missing field {key!r}")
        m, k, n = cfg["m"], cfg["k"], cfg["n"]
        for key, v in (("m", m), ("k", k), ("n", n)):
            if not isinstance(v, int):
                raise ParamError(f"field {key!r} must be an integer")
        if m < 3 or m % 2 == 0:
            raise ParamError("m must be odd >= 3")
        if gcd(k, m) != 1:
            raise ParamError("q not primitive")
        for key in ("alpha", "beta", "lambda"):
            if not isinstance(cfg[key], list):
                raise ParamError(f"field {key!r} must be an array")

        def scalar(key, value):
            try:
                return parse_cyclotomic(value, m, k)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParamError(f"field {key!r}: {exc}") from exc

        alpha1 = scalar("alpha1", cfg["alpha1"])
        alpha = [scalar(f"alpha[{i}]", v) for i, v in enumerate(cfg["alpha"])]
        beta = [scalar(f"beta[{i}]", v) for i, v in enumerate(cfg["beta"])]
        lam = [scalar(f"lambda[{i}]", v) for i, v in enumerate(cfg["lambda"])]
        return cls(m, k, n, alpha1, alpha, beta, lam,
                   max_dim=cfg.get("max_dim", max_dim))


def classify_case(params: ModuleParams) -> CaseTag:
    """Assign Case I/II/III from the zero patterns of alpha and beta."""
    if not params.I_set:
        return CaseTag("I", params.I_set, params.J_set)
    if not (params.I_set & params.J_set):
        return CaseTag("II", params.I_set, params.J_set)
    return CaseTag("III", params.I_set, params.J_set)


def dimension(params: ModuleParams) -> int:
    return params.m ** (params.n - 1)


# ---------------------------------------------------------------------------
# the action on basis vectors
# ---------------------------------------------------------------------------

def act(a: tuple, code: int, params: ModuleParams):
    """Apply one generator to the basis vector e(a).

    Returns (coefficient, target index tuple), or (None, None) when the
    vector is annihilated.  Index arithmetic is mod m; crossing the wrap
    multiplies by the central value of the basis-building generator for
    that direction (its inverse when stepping down through zero).
    """
    m, n, dom = params.m, params.n, params.domain
    I = params.I_set
    i = gen_index(code)

    def ai(j):
        return a[j - 2]

    if i == 1:
        exp = sum(ai(j) if j in I else -ai(j) for j in range(2, n + 1))
        if is_x(code):
            return params.alpha1 * dom.q_pow(exp), a
        coeff = (params._alpha1_inv * params.lam_i(1) * params.inv_correction
                 * dom.q_pow(exp))
        return coeff, a

    pos = i - 2
    if is_x(code):
        if i not in I:
            # raising along an x-built direction
            coeff = dom.q_pow(sum(ai(j) for j in range(2, i)))
            if ai(i) == m - 1:
                coeff = coeff * params.alpha_i(i)
                return coeff, a[:pos] + (0,) + a[pos + 1:]
            return coeff, a[:pos] + (ai(i) + 1,) + a[pos + 1:]
        # lowering along a y-built direction; kills the bottom rung
        if ai(i) == 0:
            return None, None
        exp = sum(ai(j) for j in range(2, i))
        exp += sum(2 * ai(j) if j in I else -2 * ai(j)
                   for j in range(i + 1, n + 1))
        coeff = (params.lam_i(i - 1) * (dom.one - dom.q_pow(2 * ai(i)))
                 * params._inv_q2_minus_1 * dom.q_pow(exp))
        if coeff.is_zero():
            return None, None
        return coeff, a[:pos] + (ai(i) - 1,) + a[pos + 1:]

    # y_i, i >= 2
    if i not in I:
        # lowering along an x-built direction
        exp = -sum(ai(j) for j in range(2, i))
        exp += sum(2 * ai(j) if j in I else -2 * ai(j)
                   for j in range(i + 1, n + 1))
        coeff = ((params.lam_i(i) - dom.q_pow(-2 * ai(i)) * params.lam_i(i - 1))
                 * params.inv_correction * dom.q_pow(exp))
        if ai(i) == 0:
            coeff = coeff * params.alpha_i(i).inv()
            target = a[:pos] + (m - 1,) + a[pos + 1:]
        else:
            target = a[:pos] + (ai(i) - 1,) + a[pos + 1:]
        if coeff.is_zero():
            return None, None
        return coeff, target
    # raising along a y-built direction
    coeff = dom.q_pow(-sum(ai(j) for j in range(2, i)))
    if ai(i) == m - 1:
        coeff = coeff * params.beta_i(i)
        if coeff.is_zero():
            return None, None
        return coeff, a[:pos] + (0,) + a[pos + 1:]
    return coeff, a[:pos] + (ai(i) + 1,) + a[pos + 1:]


# ---------------------------------------------------------------------------
# generator matrices
# ---------------------------------------------------------------------------

def basis_indices(params: ModuleParams):
    """Enumerate (a_2, ..., a_n); a_2 varies fastest, row 0 is the seed."""
    m, n = params.m, params.n
    out = []
    for r in range(m ** (n - 1)):
        a, rem = [], r
        for _ in range(n - 1):
            a.append(rem % m)
            rem //= m
        out.append(tuple(a))
    return out


def basis_rank(a: tuple, m: int) -> int:
    r = 0
    for v in reversed(a):
        r = r * m + v
    return r


class GeneratorMatrices:
    """The 2n monomial matrices of one module instance, right action on
    row vectors: e(a) . g = sum_b M_g[a][b] e(b), so words act as
    M_(gh) = M_g M_h."""

    def __init__(self, params: ModuleParams, case: CaseTag, mats: dict):
        self.params = params
        self.case = case
        self.mats = mats
        self.dim = params.m ** (params.n - 1)

    def mat(self, name_or_code) -> CycMatrix:
        if isinstance(name_or_code, int):
            name_or_code = gen_name(name_or_code)
        return self.mats[name_or_code]

    def omega_matrix(self, i: int) -> CycMatrix:
        """Matrix of omega_i = sum_{l<=i} (1-q^-2) y_l x_l."""
        params = self.params
        total = CycMatrix.zero(params.domain.field, self.dim)
        for l in range(1, i + 1):
            prod = self.mat(ygen(l)) @ self.mat(xgen(l))
            total = total + prod.scale(params.domain.correction)
        return total

    def to_wire(self) -> dict:
        gens = {}
        for name in sorted(self.mats):
            triplets = []
            mat = self.mats[name]
            for r in range(self.dim):
                row = mat.rows.get(r, {})
                for c in sorted(row):
                    triplets.append([r, c, encode_cyclotomic(row[c])])
            gens[name] = triplets
        wire = self.params.to_wire()
        wire.update({
            "case": self.case.tag,
            "dimension": self.dim,
            "generators": gens,
        })
        return wire

    @classmethod
    def from_wire(cls, data: dict) -> "GeneratorMatrices":
        params = ModuleParams.from_config(data)
        case = classify_case(params)
        if data.get("case") != case.tag:
            raise ParamError(
                f"case tag {data.get('case')!r} does not match parameters "
                f"({case.tag})")
        dim = params.m ** (params.n - 1)
        if data.get("dimension") != dim:
            raise ParamError("dimension field does not match m^(n-1)")
        field = params.domain.field
        mats = {}
        for name, triplets in data["generators"].items():
            mat = CycMatrix(field, dim)
            for r, c, coeff in triplets:
                mat.set(r, c, parse_cyclotomic(coeff, params.m, params.k))
            mats[name] = mat
        expected = {gen_name(g) for g in all_gens(params.n)}
        if set(mats) != expected:
            raise ParamError("generator set incomplete in matrix file")
        return cls(params, case, mats)


def build_module(params: ModuleParams) -> GeneratorMatrices:
    """Aggregate the single-row action over all rows into the matrices."""
    case = classify_case(params)
    dim = dimension(params)
    if dim > params.max_dim:
        raise GuardError(
            f"dimension guard: m^(n-1) = {dim} exceeds cap {params.max_dim}")
    field = params.domain.field
    indices = basis_indices(params)
    mats = {}
    for code in all_gens(params.n):
        mat = CycMatrix(field, dim)
        for r, a in enumerate(indices):
            coeff, target = act(a, code, params)
            if coeff is not None:
                mat.set(r, basis_rank(target, params.m), coeff)
        mats[gen_name(code)] = mat
    return GeneratorMatrices(params, case, mats)


# ---------------------------------------------------------------------------
# pseudo-random instances (case-shaped draws for tests and demos)
# ---------------------------------------------------------------------------

def _random_nonzero(field, rng: random.Random) -> Cyclotomic:
    while True:
        value = field.element([rng.randint(-2, 2) for _ in range(field.degree)],
                              rng.randint(1, 3))
        if not value.is_zero():
            return value


def random_module_params(case: str, n: int, m: int, k: int,
                         seed=None, rng=None) -> ModuleParams:
    """Draw parameters with the zero pattern of the requested case.

    lambda_i for i in I and beta_i for i outside I are filled with their
    forced values so the instance verifies end to end.
    """
    if rng is None:
        rng = random.Random(seed)
    if case not in ("I", "II", "III"):
        raise ValueError(f"unknown case {case!r}")
    dom = root_domain(m, k)
    field = dom.field
    if case == "I":
        I_set = set()
    else:
        size = rng.randint(1, n - 1)
        I_set = set(rng.sample(range(2, n + 1), size))
    if case == "III":
        nil_size = rng.randint(1, len(I_set))
        nilpotent = set(rng.sample(sorted(I_set), nil_size))
    else:
        nilpotent = set()

    alpha1 = _random_nonzero(field, rng)
    lam = [_random_nonzero(field, rng)]
    alpha, beta = [], []
    qm2 = dom.q_pow(-2)
    for i in range(2, n + 1):
        if i in I_set:
            lam.append(qm2 * lam[-1])
            alpha.append(field.zero())
            beta.append(field.zero() if i in nilpotent
                        else _random_nonzero(field, rng))
        else:
            lam.append(_random_nonzero(field, rng))
            alpha.append(_random_nonzero(field, rng))
            beta.append(field.zero())  # placeholder, replaced below
    params = ModuleParams(m, k, n, alpha1, alpha, beta, lam)
    # substitute the forced y_i^m values for i outside I
    beta = [params.derived_beta(i) if i not in I_set else params.beta_i(i)
            for i in range(2, n + 1)]
    return ModuleParams(m, k, n, alpha1, alpha, beta, lam)
