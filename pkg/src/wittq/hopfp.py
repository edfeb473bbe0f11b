"""Polynomial Hopf deformations of the restricted enveloping algebra.

For an odd prime p and i in F_p - {0}, set h = (1/i) D_0 and e = i D_i.  Since
e^p = 0, the element 1 - et is invertible with polynomial inverse
alpha = sum_{n<p} e^n t^n, and (1 - et)^p = 1 makes powers by F_p exponents
well-defined.  The deformed coalgebra maps are

    coproduct(D_k) = D_k (x) (1-et)^(k/i)
                     + sum_{l=0}^{p-1} (-1)^l N_l h^(l) (x) (1-et)^(-l) D_{k+li} t^l
    antipode(D_k)  = -(1-et)^(-k/i) sum_{l=0}^{p-1} N_l D_{k+li} (h+1)^(l) t^l

with N_l = n_coeff(i, k-i, l).  Everything is an exact polynomial in t (never
truncated), and t can be specialized to any residue.  The sums run over the
full printed range even where coefficients vanish; vanishing is a checked
property, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .report import VerificationReport
from .restricted import ElementP, MonoP, one_mono
from .scalars import FpElem, is_prime, n_coeff


@dataclass(frozen=True)
class HopfParamsP:
    """Prime p, deformation direction i (nonzero mod p), and the t mode:
    t_value None keeps t symbolic, an int specializes t to that residue."""

    p: int
    i: int
    t_value: int | None = None

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.i % self.p == 0:
            raise ValueError("i must be nonzero mod p")
        object.__setattr__(self, "i", self.i % self.p)
        if self.t_value is not None:
            object.__setattr__(self, "t_value", self.t_value % self.p)


class PolyP:
    """Exact polynomial in t with ElementP coefficients (no truncation)."""

    __slots__ = ("p", "rank", "coeffs")

    def __init__(self, p: int, rank: int, coeffs=()):
        self.p = p
        self.rank = rank
        cs = list(coeffs)
        for c in cs:
            if c.p != p or c.rank != rank:
                raise ValueError("coefficient modulus/rank mismatch")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(p: int, rank: int = 1) -> "PolyP":
        return PolyP(p, rank)

    @staticmethod
    def one(p: int, rank: int = 1) -> "PolyP":
        return PolyP(p, rank, [ElementP.one(p, rank)])

    @staticmethod
    def const(x: ElementP) -> "PolyP":
        return PolyP(x.p, x.rank, [x])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> ElementP:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ElementP.zero(self.p, self.rank)

    def _promote(self, other) -> "PolyP":
        if isinstance(other, PolyP):
            if other.p != self.p or other.rank != self.rank:
                raise ValueError("modulus/rank mismatch")
            return other
        if isinstance(other, ElementP):
            return PolyP.const(other)
        if isinstance(other, (int, FpElem)):
            return PolyP.const(other * ElementP.one(self.p, self.rank))
        raise TypeError(f"cannot combine PolyP with {type(other)!r}")

    def __add__(self, other):
        other = self._promote(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyP(self.p, self.rank, [self.coeff(d) + other.coeff(d) for d in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyP(self.p, self.rank, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FpElem)):
            return PolyP(self.p, self.rank, [other * c for c in self.coeffs])
        other = self._promote(other)
        if not self.coeffs or not other.coeffs:
            return PolyP.zero(self.p, self.rank)
        p, rank = self.p, self.rank
        n = len(self.coeffs) + len(other.coeffs) - 1
        acc: list[dict] = [dict() for _ in range(n)]
        for a, ca in enumerate(self.coeffs):
            if not ca.terms:
                continue
            for b, cb in enumerate(other.coeffs):
                if not cb.terms:
                    continue
                tgt = acc[a + b]
                get = tgt.get
                for key, v in (ca * cb).terms.items():
                    nv = (get(key, 0) + v) % p
                    if nv:
                        tgt[key] = nv
                    elif key in tgt:
                        del tgt[key]
        return PolyP(p, rank, [ElementP._make(p, rank, d) for d in acc])

    def __rmul__(self, other):
        if isinstance(other, (int, FpElem)):
            return self * other
        if isinstance(other, ElementP):
            return PolyP.const(other) * self
        return NotImplemented

    def __pow__(self, n: int):
        out = PolyP.one(self.p, self.rank)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, d: int) -> "PolyP":
        if not self.coeffs:
            return self
        pad = [ElementP.zero(self.p, self.rank)] * d
        return PolyP(self.p, self.rank, pad + list(self.coeffs))

    def tensor_left(self, x: ElementP) -> "PolyP":
        """x (x) self, degreewise."""
        return PolyP(self.p, self.rank + x.rank, [x.tensor(c) for c in self.coeffs])

    def swap(self) -> "PolyP":
        return PolyP(self.p, self.rank, [c.swap() for c in self.coeffs])

    def evaluate(self, c: int) -> ElementP:
        """Specialize t to the residue c."""
        out = ElementP.zero(self.p, self.rank)
        power = 1
        for coeff in self.coeffs:
            out = out + power * coeff
            power = (power * c) % self.p
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, PolyP):
            return NotImplemented
        return self.p == other.p and self.rank == other.rank and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.rank, self.coeffs))

    def __str__(self):
        lines = [f"t^{d}: {c}" for d, c in enumerate(self.coeffs) if not c.is_zero()]
        return "\n".join(lines) if lines else "0"

    __repr__ = __str__


def first_mismatch_p(a: PolyP, b: PolyP) -> str | None:
    n = max(len(a.coeffs), len(b.coeffs))
    for d in range(n):
        ca, cb = a.coeff(d), b.coeff(d)
        if ca != cb:
            keys = sorted(set(ca.terms) | set(cb.terms))
            for key in keys:
                va, vb = ca.coeff(key), cb.coeff(key)
                if va != vb:
                    return f"t^{d} at {key}: {va} != {vb}"
    return None


# -- distinguished elements -----------------------------------------------------


def h_element_p(p: int, i: int) -> ElementP:
    """h = (1/i) D_0."""
    return pow(i, p - 2, p) * ElementP.gen(0, p)


def e_element_p(p: int, i: int, n: int = 1) -> ElementP:
    """e^n with e = i D_i; zero once n reaches p."""
    if n == 0:
        return ElementP.one(p)
    if n >= p:
        return ElementP.zero(p)
    mono = tuple(n if j == i % p else 0 for j in range(p))
    return ElementP.from_mono(p, mono, pow(i, n, p))


@lru_cache(maxsize=None)
def _h_rising_p(l: int, p: int, i: int) -> ElementP:
    out = ElementP.one(p)
    h = h_element_p(p, i)
    for j in range(l):
        out = out * (h + j)
    return out


@lru_cache(maxsize=None)
def _h_plus_one_rising_p(l: int, p: int, i: int) -> ElementP:
    out = ElementP.one(p)
    h1 = h_element_p(p, i) + 1
    for j in range(l):
        out = out * (h1 + j)
    return out


@dataclass(frozen=True)
class RadfordGens:
    """The pair (h, e) and the group-like alpha = (1 - et)^{-1} they generate."""

    h: ElementP
    e: ElementP
    alpha: "PolyP"


def alpha(params: HopfParamsP) -> PolyP:
    """(1 - et)^{-1} = sum_{n<p} e^n t^n, exact because e^p = 0."""
    p, i = params.p, params.i
    return PolyP(p, 1, [e_element_p(p, i, n) for n in range(p)])


def one_minus_et(params: HopfParamsP) -> PolyP:
    p, i = params.p, params.i
    return PolyP(p, 1, [ElementP.one(p), -e_element_p(p, i)])


def radford_generators(params: HopfParamsP) -> RadfordGens:
    return RadfordGens(
        h=h_element_p(params.p, params.i),
        e=e_element_p(params.p, params.i),
        alpha=alpha(params),
    )


@lru_cache(maxsize=None)
def _power_fp(m: int, p: int, i: int) -> PolyP:
    base = one_minus_et(HopfParamsP(p, i))
    out = PolyP.one(p, 1)
    for _ in range(m % p):
        out = out * base
    return out


def power_fp(m, params: HopfParamsP) -> PolyP:
    """(1 - et)^m for an F_p exponent m, via the representative in {0..p-1};
    well-defined because (1 - et)^p = 1."""
    if isinstance(m, FpElem):
        if m.p != params.p:
            raise ValueError("mismatched moduli")
        m = m.residue
    return _power_fp(m % params.p, params.p, params.i)


# -- deformed structure maps ------------------------------------------------------


@lru_cache(maxsize=None)
def _gen_coproduct_p(k: int, p: int, i: int, corrupt_term) -> PolyP:
    k_over_i = (k * pow(i, p - 2, p)) % p
    out = _power_fp(k_over_i, p, i).tensor_left(ElementP.gen(k, p))
    for l in range(p):
        nl = n_coeff(FpElem(i, p), FpElem(k - i, p), l).residue
        if corrupt_term == l:
            nl = (nl + 1) % p
        if nl == 0:
            continue
        sign = (p - 1) if l % 2 else 1  # (-1)^l mod p
        hl = _h_rising_p(l, p, i)
        right = _power_fp((-l) % p, p, i) * ElementP.gen(k + l * i, p)
        term = PolyP(p, 2, [hl.tensor(rc) for rc in right.coeffs])
        out = out + term.shift(l) * ((sign * nl) % p)
    return out


def coproduct_p(k, params: HopfParamsP, corrupt_term: int | None = None) -> PolyP:
    """Deformed coproduct of D_k as an exact polynomial; specialized if the
    params carry a t value.

    corrupt_term bumps the degree-l coefficient by one, existing only so the
    verifiers can demonstrate they would catch a wrong table.
    """
    if isinstance(k, FpElem):
        if k.p != params.p:
            raise ValueError("mismatched moduli")
        k = k.residue
    out = _gen_coproduct_p(k % params.p, params.p, params.i, corrupt_term)
    if params.t_value is not None:
        return PolyP.const(out.evaluate(params.t_value))
    return out


@lru_cache(maxsize=None)
def _gen_antipode_p(k: int, p: int, i: int) -> PolyP:
    pre = _power_fp((-k * pow(i, p - 2, p)) % p, p, i)
    tail = PolyP.zero(p, 1)
    for l in range(p):
        nl = n_coeff(FpElem(i, p), FpElem(k - i, p), l).residue
        if nl == 0:
            continue
        elem = ElementP.gen(k + l * i, p) * _h_plus_one_rising_p(l, p, i)
        tail = tail + PolyP.const(elem).shift(l) * nl
    return -(pre * tail)


def antipode_p(k, params: HopfParamsP) -> PolyP:
    """Deformed antipode of D_k, operand order exactly as in the defining formula."""
    if isinstance(k, FpElem):
        if k.p != params.p:
            raise ValueError("mismatched moduli")
        k = k.residue
    out = _gen_antipode_p(k % params.p, params.p, params.i)
    if params.t_value is not None:
        return PolyP.const(out.evaluate(params.t_value))
    return out


def counit_p(x: ElementP) -> FpElem:
    """Algebra morphism to F_p killing every generator."""
    if x.rank != 1:
        raise ValueError("counit takes rank-1 elements")
    return FpElem(x.terms.get((one_mono(x.p),), 0), x.p)


def specialize_t(x: PolyP, c) -> ElementP:
    """Evaluate an exact polynomial at t = c."""
    if isinstance(c, FpElem):
        if c.p != x.p:
            raise ValueError("mismatched moduli")
        c = c.residue
    return x.evaluate(c % x.p)


# -- multiplicative/antimultiplicative extension ----------------------------------


@lru_cache(maxsize=None)
def _mono_coproduct_p(mono: MonoP, p: int, i: int, t_value, corrupt_term) -> PolyP:
    out = PolyP.one(p, 2)
    for k, m in enumerate(mono):
        if not m:
            continue
        g = _gen_coproduct_p(k, p, i, corrupt_term)
        if t_value is not None:
            g = PolyP.const(g.evaluate(t_value))
        for _ in range(m):
            out = out * g
    return out


@lru_cache(maxsize=None)
def _mono_antipode_p(mono: MonoP, p: int, i: int, t_value) -> PolyP:
    out = PolyP.one(p, 1)
    for k in range(p - 1, -1, -1):
        m = mono[k]
        if not m:
            continue
        g = _gen_antipode_p(k, p, i)
        if t_value is not None:
            g = PolyP.const(g.evaluate(t_value))
        for _ in range(m):
            out = out * g
    return out


def coproduct_element_p(x: ElementP, params: HopfParamsP, corrupt_term: int | None = None) -> PolyP:
    out = PolyP.zero(params.p, 2)
    for (mono,), c in x.terms.items():
        out = out + _mono_coproduct_p(mono, params.p, params.i, params.t_value, corrupt_term) * c
    return out


def antipode_element_p(x: ElementP, params: HopfParamsP) -> PolyP:
    out = PolyP.zero(params.p, 1)
    for (mono,), c in x.terms.items():
        out = out + _mono_antipode_p(mono, params.p, params.i, params.t_value) * c
    return out


def coproduct_poly(x: PolyP, params: HopfParamsP, corrupt_term: int | None = None) -> PolyP:
    """Coproduct of a t-polynomial of elements, t-linearly."""
    out = PolyP.zero(params.p, 2)
    for d, c in enumerate(x.coeffs):
        term = coproduct_element_p(c, params, corrupt_term)
        out = out + (term.shift(d) if params.t_value is None else term * pow(params.t_value, d, params.p))
    return out


def antipode_poly(x: PolyP, params: HopfParamsP) -> PolyP:
    out = PolyP.zero(params.p, 1)
    for d, c in enumerate(x.coeffs):
        term = antipode_element_p(c, params)
        out = out + (term.shift(d) if params.t_value is None else term * pow(params.t_value, d, params.p))
    return out


# -- slot plumbing -----------------------------------------------------------------


def _slot_apply_p(s: PolyP, slot: int, fn) -> PolyP:
    sample = fn(one_mono(s.p))
    out_rank = s.rank - 1 + sample.rank
    acc: list[dict] = []

    def bump(d, key, c):
        while len(acc) <= d:
            acc.append({})
        acc[d][key] = (acc[d].get(key, 0) + c) % s.p

    for d, elem in enumerate(s.coeffs):
        for key, c in elem.terms.items():
            sub = fn(key[slot])
            for e, sc_elem in enumerate(sub.coeffs):
                for skey, sc in sc_elem.terms.items():
                    bump(d + e, key[:slot] + skey + key[slot + 1 :], c * sc)
    return PolyP(s.p, out_rank, [ElementP(s.p, out_rank, terms) for terms in acc])


def _counit_slot_p(s: PolyP, slot: int) -> PolyP:
    out_rank = s.rank - 1
    unit = one_mono(s.p)
    coeffs = []
    for elem in s.coeffs:
        terms = {}
        for key, c in elem.terms.items():
            if key[slot] == unit:
                nkey = key[:slot] + key[slot + 1 :]
                terms[nkey] = (terms.get(nkey, 0) + c) % s.p
        coeffs.append(ElementP(s.p, out_rank, terms))
    return PolyP(s.p, out_rank, coeffs)


def _convolve_p(s: PolyP, apode, side: str) -> PolyP:
    p = s.p
    acc: list[dict] = []

    def bump(d, key, c):
        while len(acc) <= d:
            acc.append({})
        acc[d][key] = (acc[d].get(key, 0) + c) % p

    for d, elem in enumerate(s.coeffs):
        for (m1, m2), c in elem.terms.items():
            if side == "left":
                sub, other, other_left = apode(m1), ElementP.from_mono(p, m2), False
            else:
                sub, other, other_left = apode(m2), ElementP.from_mono(p, m1), True
            for e, sc_elem in enumerate(sub.coeffs):
                part = other * sc_elem if other_left else sc_elem * other
                for key, sc in part.terms.items():
                    bump(d + e, key, c * sc)
    return PolyP(p, 1, [ElementP(p, 1, terms) for terms in acc])


# -- verifiers -----------------------------------------------------------------------


def _t_label(t_value) -> str:
    return "symbolic" if t_value is None else str(t_value)


def verify_relations_preserved(params: HopfParamsP, corrupt_term: int | None = None) -> VerificationReport:
    """The deformed maps must respect the defining relations: commutators of
    generator images, and the p-power relations, for both the coproduct
    (morphism) and the antipode (antimorphism)."""
    p, i, tv = params.p, params.i, params.t_value
    rep = VerificationReport()
    base = {"p": p, "i": i, "t": _t_label(tv)}
    dk = {k: coproduct_p(k, params, corrupt_term) for k in range(p)}
    sk = {k: antipode_p(k, params) for k in range(p)}

    for k in range(p):
        for l in range(p):
            pt = dict(base, k=k, l=l)
            lhs = dk[k] * dk[l] - dk[l] * dk[k]
            rhs = ((l - k) % p) * dk[(k + l) % p]
            rep.add("coproduct-commutator", pt, lhs == rhs, first_mismatch_p(lhs, rhs))
            lhs_s = sk[l] * sk[k] - sk[k] * sk[l]
            rhs_s = ((l - k) % p) * sk[(k + l) % p]
            rep.add("antipode-commutator", pt, lhs_s == rhs_s, first_mismatch_p(lhs_s, rhs_s))

    for k in range(p):
        pt = dict(base, k=k)
        dpow = dk[k] ** p
        want = dk[0] if k == 0 else PolyP.zero(p, 2)
        rep.add("coproduct-p-power", pt, dpow == want, first_mismatch_p(dpow, want))
        spow = sk[k] ** p
        want_s = sk[0] if k == 0 else PolyP.zero(p, 1)
        rep.add("antipode-p-power", pt, spow == want_s, first_mismatch_p(spow, want_s))
    return rep


def verify_hopf_p(params: HopfParamsP, t_values=(None,)) -> VerificationReport:
    """Full Hopf axiom suite on generators, once per requested t mode
    (None = symbolic, ints = specializations)."""
    p, i = params.p, params.i
    rep = VerificationReport()
    for tv in t_values:
        pp = HopfParamsP(p, i, tv)
        base = {"p": p, "i": i, "t": _t_label(pp.t_value)}
        cp_mono = lambda mono: _mono_coproduct_p(mono, p, i, pp.t_value, None)
        ap_mono = lambda mono: _mono_antipode_p(mono, p, i, pp.t_value)
        dk = {k: coproduct_p(k, pp) for k in range(p)}

        for k in range(p):
            pt = dict(base, k=k)
            lhs = _slot_apply_p(dk[k], 0, cp_mono)
            rhs = _slot_apply_p(dk[k], 1, cp_mono)
            rep.add("coassociativity", pt, lhs == rhs, first_mismatch_p(lhs, rhs))

            want = PolyP.const(ElementP.gen(k, p))
            cl = _counit_slot_p(dk[k], 0)
            cr = _counit_slot_p(dk[k], 1)
            rep.add("counit-left", pt, cl == want, first_mismatch_p(cl, want))
            rep.add("counit-right", pt, cr == want, first_mismatch_p(cr, want))

            zero = PolyP.zero(p, 1)
            al = _convolve_p(dk[k], ap_mono, "left")
            ar = _convolve_p(dk[k], ap_mono, "right")
            rep.add("antipode-left", pt, al == zero, first_mismatch_p(al, zero))
            rep.add("antipode-right", pt, ar == zero, first_mismatch_p(ar, zero))

        for k in range(p):
            for l in range(p):
                pt = dict(base, k=k, l=l)
                prod = ElementP.gen(k, p) * ElementP.gen(l, p)
                lhs = coproduct_element_p(prod, pp)
                rhs = dk[k] * dk[l]
                rep.add("coproduct-multiplicative", pt, lhs == rhs, first_mismatch_p(lhs, rhs))
    return rep


def radford_check(params: HopfParamsP) -> VerificationReport:
    """Relations of the distinguished subalgebra generated by h and e, plus its
    closure under the structure maps."""
    p, i = params.p, params.i
    pp = HopfParamsP(p, i)  # symbolic
    base = {"p": p, "i": i}
    rep = VerificationReport()

    gens = radford_generators(pp)
    h, e, a = gens.h, gens.e, gens.alpha
    hp = PolyP.const(h)
    one = PolyP.one(p, 1)
    inv_i = pow(i, p - 2, p)

    comm = hp * a - a * hp
    rep.add("h-alpha-commutator", base, comm == a * a - a, first_mismatch_p(comm, a * a - a))

    hpow = h
    for _ in range(p - 1):
        hpow = hpow * h
    rep.add("h-p-power", base, hpow == h)

    apow = a**p
    rep.add("alpha-p-power", base, apow == one, first_mismatch_p(apow, one))

    dh = coproduct_poly(hp, pp)
    want_dh = a.tensor_left(h) + PolyP(p, 2, [ElementP.one(p).tensor(h)])
    rep.add("coproduct-h", base, dh == want_dh, first_mismatch_p(dh, want_dh))

    da = coproduct_poly(a, pp)
    want_da = PolyP.zero(p, 2)
    for m, cm in enumerate(a.coeffs):
        for n, cn in enumerate(a.coeffs):
            want_da = want_da + PolyP.const(cm.tensor(cn)).shift(m + n)
    rep.add("alpha-group-like", base, da == want_da, first_mismatch_p(da, want_da))

    # the convolution axiom forces S(h) = -h alpha^{-1}
    sh = antipode_poly(hp, pp)
    want_sh = -(hp * one_minus_et(pp))
    rep.add("antipode-h", base, sh == want_sh, first_mismatch_p(sh, want_sh))

    rep.add("counit-h", base, counit_p(h) == FpElem(0, p))

    allowed = {0, i % p}
    closed = True
    for poly in (coproduct_poly(hp, pp), coproduct_poly(PolyP.const(e), pp)):
        for c in poly.coeffs:
            closed = closed and c.supported_indices() <= allowed
    for poly in (antipode_poly(hp, pp), antipode_poly(PolyP.const(e), pp)):
        for c in poly.coeffs:
            closed = closed and c.supported_indices() <= allowed
    rep.add("subalgebra-closed", base, closed)
    return rep


def verify_all_p(params: HopfParamsP, t_values=(None,)) -> VerificationReport:
    """Relations, Hopf axioms (per t mode) and the distinguished-subalgebra
    relations for one (p, i)."""
    rep = VerificationReport()
    for tv in t_values:
        rep.extend(verify_relations_preserved(HopfParamsP(params.p, params.i, tv)))
    rep.extend(verify_hopf_p(params, t_values))
    rep.extend(radford_check(params))
    return rep
