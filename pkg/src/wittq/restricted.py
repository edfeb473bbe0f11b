"""The Witt algebra in characteristic p and its restricted enveloping algebra.

Generators D_0 .. D_{p-1} obey [D_k, D_l] = (l - k) D_{(k+l) mod p}; the
restricted enveloping algebra is cut out by D_0^p = D_0 and D_k^p = 0 for
k != 0, so the basis is the p^p exponent vectors (a_0, ..., a_{p-1}) with all
entries below p.  Coefficients are residues mod p, stored as plain ints in
[0, p); FpElem appears at API boundaries.

Multiplication inserts one generator at a time into canonical monomials,
applying the p-power reductions as exponents fill up; the memo for that step
is keyed on (monomial, generator) pairs, so it never grows past the p^p basis.
A word-level straightener that reduces only at the end is kept alongside it;
the test suite checks the two orderings agree (the rewriting is confluent on
everything tested) rather than assuming it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct
from math import comb
from typing import NamedTuple

from .report import VerificationReport
from .scalars import FpElem, is_prime

MonoP = tuple[int, ...]
WordP = tuple[int, ...]


class WittBasisVector(NamedTuple):
    """Index into the truncated-basis presentation: k in {-1, ..., p-2}."""

    k: int
    p: int

    def validate(self) -> "WittBasisVector":
        if not -1 <= self.k <= self.p - 2:
            raise ValueError(f"index {self.k} outside {{-1, ..., {self.p - 2}}}")
        return self


def _check_prime(p: int):
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


def one_mono(p: int) -> MonoP:
    return (0,) * p


def gen_mono(k: int, p: int) -> MonoP:
    return tuple(1 if j == k % p else 0 for j in range(p))


@lru_cache(maxsize=None)
def _times_gen_p(word: WordP, g: int, p: int) -> tuple[tuple[WordP, int], ...]:
    # word ascending (indices in [0, p)); result: normal form of word * D_g, no
    # exponent reduction yet.
    if not word or word[-1] <= g:
        return ((word + (g,), 1),)
    head, a = word[:-1], word[-1]
    acc: dict[WordP, int] = {}
    for w1, c1 in _times_gen_p(head, g, p):
        for w2, c2 in _times_gen_p(w1, a, p):
            acc[w2] = (acc.get(w2, 0) + c1 * c2) % p
    merge_c = (g - a) % p
    if merge_c:
        for w1, c1 in _times_gen_p(head, (g + a) % p, p):
            acc[w1] = (acc.get(w1, 0) + merge_c * c1) % p
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def _reduce_word(word: WordP, p: int) -> MonoP | None:
    counts = [0] * p
    for k in word:
        counts[k] += 1
    while counts[0] >= p:
        counts[0] -= p - 1
    for k in range(1, p):
        if counts[k] >= p:
            return None
    return tuple(counts)


@lru_cache(maxsize=None)
def straighten_p(word: WordP, p: int) -> tuple[tuple[MonoP, int], ...]:
    """Normal form of the product D_{word[0]} ... D_{word[-1]} in U_c."""
    acc: dict[WordP, int] = {(): 1}
    for g in word:
        nxt: dict[WordP, int] = {}
        for w, c in acc.items():
            for w2, c2 in _times_gen_p(w, g % p, p):
                nxt[w2] = (nxt.get(w2, 0) + c * c2) % p
        acc = {w: c for w, c in nxt.items() if c}
    out: dict[MonoP, int] = {}
    for w, c in acc.items():
        mono = _reduce_word(w, p)
        if mono is not None:
            out[mono] = (out.get(mono, 0) + c) % p
    return tuple(sorted((m, c) for m, c in out.items() if c))


def _word_of(mono: MonoP) -> WordP:
    return tuple(k for k, m in enumerate(mono) for _ in range(m))


def _bump(mono: MonoP, g: int, p: int) -> tuple[tuple[MonoP, int], ...]:
    # append D_g to a monomial whose top index is <= g, applying the p-power
    # reductions D_0^p = D_0 and D_g^p = 0
    e = mono[g] + 1
    if e == p:
        if g:
            return ()
        e = 1
    return ((mono[:g] + (e,) + mono[g + 1 :], 1),)


@lru_cache(maxsize=None)
def mono_times_gen_p(mono: MonoP, g: int, p: int) -> tuple[tuple[MonoP, int], ...]:
    """Canonical form of mono * D_g.  Keyed on canonical monomials so the memo
    stays within the p^p basis instead of the space of arbitrary words."""
    top = -1
    for idx in range(p - 1, -1, -1):
        if mono[idx]:
            top = idx
            break
    if top <= g:
        return _bump(mono, g, p)
    m1 = mono[:top] + (mono[top] - 1,) + mono[top + 1 :]
    acc: dict[MonoP, int] = {}
    for n, c in mono_times_gen_p(m1, g, p):
        for n2, c2 in mono_times_gen_p(n, top, p):
            acc[n2] = (acc.get(n2, 0) + c * c2) % p
    merge_c = (g - top) % p
    if merge_c:
        for n, c in mono_times_gen_p(m1, (g + top) % p, p):
            acc[n] = (acc.get(n, 0) + merge_c * c) % p
    return tuple(sorted((m, c) for m, c in acc.items() if c))


@lru_cache(maxsize=1 << 18)
def mono_mul_p(a: MonoP, b: MonoP, p: int) -> tuple[tuple[MonoP, int], ...]:
    if not any(a):
        return ((b, 1),)
    acc: dict[MonoP, int] = {a: 1}
    for g in _word_of(b):
        nxt: dict[MonoP, int] = {}
        get = nxt.get
        for m, c in acc.items():
            for m2, c2 in mono_times_gen_p(m, g, p):
                nxt[m2] = (get(m2, 0) + c * c2) % p
        acc = {m: c for m, c in nxt.items() if c}
        if not acc:
            return ()
    return tuple(sorted(acc.items()))


def _mono_str(mono: MonoP) -> str:
    parts = [f"D_{k}" if m == 1 else f"D_{k}^{m}" for k, m in enumerate(mono) if m]
    return "*".join(parts) if parts else "1"


class ElementP:
    """Sparse F_p-linear combination of (tensors of) restricted monomials."""

    __slots__ = ("p", "rank", "terms")

    def __init__(self, p: int, rank: int = 1, terms: dict | None = None):
        _check_prime(p)
        self.p = p
        self.rank = rank
        clean = {}
        for key, c in (terms or {}).items():
            if len(key) != rank or any(
                len(m) != p or any(not 0 <= e < p for e in m) for m in key
            ):
                raise ValueError(f"non-canonical monomial key {key!r} for p={p}, rank={rank}")
            c = int(c) % p
            if c:
                clean[key] = c
        self.terms = clean

    @classmethod
    def _make(cls, p: int, rank: int, terms: dict) -> "ElementP":
        # fast path: residues already reduced, zeros already pruned
        self = cls.__new__(cls)
        self.p = p
        self.rank = rank
        self.terms = terms
        return self

    @staticmethod
    def zero(p: int, rank: int = 1) -> "ElementP":
        return ElementP(p, rank)

    @staticmethod
    def one(p: int, rank: int = 1) -> "ElementP":
        return ElementP(p, rank, {(one_mono(p),) * rank: 1})

    @staticmethod
    def gen(k: int, p: int) -> "ElementP":
        return ElementP(p, 1, {(gen_mono(k, p),): 1})

    @staticmethod
    def from_mono(p: int, mono: MonoP, coeff: int = 1) -> "ElementP":
        return ElementP(p, 1, {(mono,): coeff})

    def _check(self, other: "ElementP"):
        if self.p != other.p:
            raise ValueError(f"mismatched moduli {self.p} and {other.p}")
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, int):
            other = other * ElementP.one(self.p, self.rank)
        self._check(other)
        out = dict(self.terms)
        get = out.get
        for key, c in other.terms.items():
            v = (get(key, 0) + c) % self.p
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return ElementP._make(self.p, self.rank, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * ElementP.one(self.p, self.rank)
        return self + (-other)

    def __neg__(self):
        p = self.p
        return ElementP._make(p, self.rank, {k: p - c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            s = scalar % self.p
            if not s:
                return ElementP._make(self.p, self.rank, {})
            # s*c is never 0 mod p for nonzero residues
            return ElementP._make(self.p, self.rank, {k: (s * c) % self.p for k, c in self.terms.items()})
        if isinstance(scalar, FpElem):
            if scalar.p != self.p:
                raise ValueError("mismatched moduli")
            return self.__rmul__(scalar.residue)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, FpElem)):
            return self.__rmul__(other)
        self._check(other)
        p = self.p
        rank = self.rank
        if rank <= 2:
            # fold the right factor's generators across the whole left element;
            # every step is a cached (monomial, generator) expansion, so the
            # cost tracks the support size instead of per-pair rewriting depth
            out: dict = {}
            oget = out.get
            for kb, cb in other.terms.items():
                acc = self.terms
                for slot in range(rank):
                    for g in _word_of(kb[slot]):
                        nxt: dict = {}
                        nget = nxt.get
                        for key, c in acc.items():
                            for m2, c2 in mono_times_gen_p(key[slot], g, p):
                                nkey = (m2,) if rank == 1 else (
                                    (m2, key[1]) if slot == 0 else (key[0], m2)
                                )
                                nxt[nkey] = nget(nkey, 0) + c * c2
                        acc = {k: v % p for k, v in nxt.items() if v % p}
                        if not acc:
                            break
                    if not acc:
                        break
                for key, c in acc.items():
                    out[key] = oget(key, 0) + c * cb
            clean = {}
            for key, v in out.items():
                v %= p
                if v:
                    clean[key] = v
            return ElementP._make(p, rank, clean)

        out = {}
        get = out.get
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                parts = [mono_mul_p(ma, mb, p) for ma, mb in zip(ka, kb)]
                if any(not part for part in parts):
                    continue
                for combo in iproduct(*parts):
                    c = ca * cb
                    for _, ci in combo:
                        c *= ci
                    c %= p
                    if not c:
                        continue
                    key = tuple(m for m, _ in combo)
                    out[key] = (get(key, 0) + c) % p
        zeros = [k for k, v in out.items() if not v]
        for k in zeros:
            del out[k]
        return ElementP._make(p, self.rank, out)

    def __pow__(self, n: int):
        out = ElementP.one(self.p, self.rank)
        for _ in range(n):
            out = out * self
        return out

    def tensor(self, other: "ElementP") -> "ElementP":
        if self.p != other.p:
            raise ValueError("mismatched moduli")
        p = self.p
        out = {
            ka + kb: (ca * cb) % p
            for ka, ca in self.terms.items()
            for kb, cb in other.terms.items()
        }
        return ElementP._make(p, self.rank + other.rank, out)

    def swap(self) -> "ElementP":
        if self.rank != 2:
            raise ValueError("swap needs rank 2")
        return ElementP(self.p, 2, {(b, a): c for (a, b), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, key) -> int:
        return self.terms.get(key, 0)

    def supported_indices(self) -> set[int]:
        """Generator indices appearing anywhere in the support."""
        out: set[int] = set()
        for key in self.terms:
            for mono in key:
                out.update(k for k, m in enumerate(mono) if m)
        return out

    def __eq__(self, other):
        if not isinstance(other, ElementP):
            return NotImplemented
        return self.p == other.p and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            mono = " (x) ".join(_mono_str(m) for m in key)
            bits.append(f"{self.terms[key]} * {mono}")
        return " + ".join(bits)

    __repr__ = __str__


# -- public operation surface ------------------------------------------------


def _residue(x, p=None) -> tuple[int, int]:
    if isinstance(x, FpElem):
        if p is not None and x.p != p:
            raise ValueError("mismatched moduli")
        return x.residue, x.p
    if p is None:
        raise ValueError("modulus required for plain int arguments")
    return x % p, p


def bracket_p(k, l, p: int | None = None) -> ElementP:
    """[D_k, D_l] = (l - k) D_{(k+l) mod p}."""
    k, p = _residue(k, p)
    l, p = _residue(l, p)
    return ElementP(p, 1, {(gen_mono(k + l, p),): (l - k) % p})


def multiply_p(x: ElementP, y: ElementP) -> ElementP:
    return x * y


def commutator_p(x: ElementP, y: ElementP) -> ElementP:
    return x * y - y * x


def basis_size(p: int, materialize: bool | None = None) -> int:
    """Dimension of the restricted enveloping algebra.

    Enumerates the exponent-vector basis when it is small enough to hold
    (default for p <= 5) and counts arithmetically otherwise.
    """
    _check_prime(p)
    if materialize is None:
        materialize = p <= 5
    if materialize:
        return sum(1 for _ in iproduct(range(p), repeat=p))
    return p**p


def embed_witt(k: int, p: int) -> ElementP:
    """Image of the truncated-basis generator e_k, k in {-1, ..., p-2}."""
    _check_prime(p)
    WittBasisVector(k, p).validate()
    terms: dict = {}
    for l in range(-1, k + 1):
        sign = -1 if l % 2 else 1  # (-1)^l, with (-1)^(-1) = -1
        c = (sign * comb(k + 1, l + 1)) % p
        if c:
            terms[(gen_mono(l % p, p),)] = c
    return ElementP(p, 1, terms)


def _fp_rank(rows: list[list[int]], p: int) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] % p:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def verify_witt_iso(p: int) -> VerificationReport:
    """Check the truncated-basis presentation maps isomorphically onto the
    periodic one: bracket relations on all index pairs, plus linear
    independence of the images."""
    _check_prime(p)
    rep = VerificationReport()
    phi = {k: embed_witt(k, p) for k in range(-1, p - 1)}

    for k in range(-1, p - 1):
        for l in range(-1, p - 1):
            lhs = commutator_p(phi[k], phi[l])
            if (l - k) % p and -1 <= k + l <= p - 2:
                rhs = ((l - k) % p) * phi[k + l]
            else:
                rhs = ElementP.zero(p)
            rep.add(
                "witt-embedding-bracket",
                {"p": p, "k": k, "l": l},
                lhs == rhs,
                None if lhs == rhs else f"{lhs} != {rhs}",
            )

    rows = []
    for k in range(-1, p - 1):
        row = [0] * p
        for (mono,), c in phi[k].terms.items():
            idx = next(j for j, m in enumerate(mono) if m)
            row[idx] = c
        rows.append(row)
    rep.add("witt-embedding-independent", {"p": p}, _fp_rank(rows, p) == p)
    return rep


def act_derivation(k, m: int, p: int | None = None) -> tuple[FpElem, int]:
    """D_k . X^m = m X^{(m+k) mod p} in Der(F_p[X]/(X^p - 1))."""
    k, p = _residue(k, p)
    return FpElem(m, p), (m + k) % p


def p_power_map(k, p: int | None = None) -> ElementP:
    """The restricted p-power of a generator: D_0 for k = 0, zero otherwise."""
    k, p = _residue(k, p)
    if k == 0:
        return ElementP.gen(0, p)
    return ElementP.zero(p)
