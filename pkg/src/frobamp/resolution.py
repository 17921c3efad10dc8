"""Finite free resolutions of graded modules, minimalized step by step.

The construction is the classical iterated-syzygy one: starting from the
presentation, compute a Groebner-basis generating set of the kernel of the
last map, splice it on, and repeat.  After each step the new differential is
minimalized by cancelling unit (degree-zero) entries; cancelling a unit at
position (r, c) performs a Schur-complement update on the map, deletes
generator c of the source and generator r of the target, and deletes the
corresponding column of the previous differential (which the complex
property forces to become zero - asserted, not assumed).

Over F_p[x_0..x_n] every graded module has projective dimension at most
n + 1, so the minimal chain always terminates within num_vars maps.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import groebner
from .linalg import rank_mod
from .modules import GradedMap, GradedModule, free_piece_dimension
from .polynomials import MultiPoly


class _MapData:
    """Mutable matrix + twist lists used while building a resolution."""

    def __init__(self, tt, st, ent):
        self.tt = list(tt)
        self.st = list(st)
        self.ent = [list(row) for row in ent]

    @classmethod
    def from_map(cls, gm: GradedMap):
        return cls(gm.target_twists, gm.source_twists, gm.entries)

    def to_map(self, prime, num_vars) -> GradedMap:
        return GradedMap(prime, num_vars, tuple(self.tt), tuple(self.st),
                         tuple(tuple(row) for row in self.ent))

    def find_unit(self):
        for r, row in enumerate(self.ent):
            for c, f in enumerate(row):
                if not f.is_zero() and f.degree() == 0:
                    return r, c
        return None


def _cancel_unit(md: _MapData, left: _MapData, r: int, c: int, p: int):
    u = next(iter(md.ent[r][c].terms.values()))
    uinv = pow(u, p - 2, p)
    pivot_col = [md.ent[rr][c] for rr in range(len(md.tt))]
    pivot_row = md.ent[r]
    new_ent = []
    for rr in range(len(md.tt)):
        if rr == r:
            continue
        row = []
        for cc in range(len(md.st)):
            if cc == c:
                continue
            f = md.ent[rr][cc] - pivot_col[rr].scale(uinv) * pivot_row[cc]
            row.append(f)
        new_ent.append(row)
    if left is not None:
        # the cancelled target generator is u^{-1} * (image of source gen c);
        # the previous differential kills it, so its adjusted column vanishes
        for ltrow in left.ent:
            combo = ltrow[r]
            for rr in range(len(md.tt)):
                if rr != r:
                    combo = combo + ltrow[rr] * pivot_col[rr].scale(uinv)
            if not combo.is_zero():
                raise AssertionError(
                    "complex property violated during minimalization")
        for ltrow in left.ent:
            del ltrow[r]
        del left.st[r]
    del md.tt[r]
    del md.st[c]
    md.ent = new_ent


def _minimalize_last(md: _MapData, left, p: int):
    while True:
        pos = md.find_unit()
        if pos is None:
            return
        _cancel_unit(md, left, pos[0], pos[1], p)


@dataclass(frozen=True)
class FreeResolution:
    """Chain F_len -> ... -> F_1 -> F_0 with maps[k]: F_{k+1} -> F_k."""

    f0_twists: tuple
    maps: tuple

    @property
    def length(self) -> int:
        return len(self.maps)

    def module_twists(self, k: int) -> tuple:
        if k == 0:
            return self.f0_twists
        return self.maps[k - 1].source_twists

    def betti_numbers(self):
        """Homological index -> Counter of generator degrees."""
        out = {0: Counter(self.f0_twists)}
        for k, m in enumerate(self.maps):
            out[k + 1] = Counter(m.source_twists)
        return out

    def regularity_bound(self) -> int:
        """max(generator degree - homological index) over the resolution."""
        best = max(self.f0_twists, default=None)
        if best is None:
            raise ValueError("resolution of the zero module")
        for k, m in enumerate(self.maps):
            for t in m.source_twists:
                best = max(best, t - (k + 1))
        return best

    def is_minimal(self) -> bool:
        return all(f.is_zero() or f.degree() > 0
                   for m in self.maps for row in m.entries for f in row)

    def compositions_are_zero(self) -> bool:
        for a, b in zip(self.maps, self.maps[1:]):
            if not a.compose(b).is_zero():
                return False
        return True

    def default_window(self):
        nv = self.maps[0].num_vars if self.maps else len(self.f0_twists)
        twists = list(self.f0_twists)
        for m in self.maps:
            twists.extend(m.source_twists)
        if not twists:
            return range(0, 1)
        return range(min(twists), max(twists) + nv + 2)

    def degreewise_exact(self, window=None) -> bool:
        """Exactness at every interior step, degree by degree.

        At F_k (k >= 1) the kernel of the outgoing map must match the image
        of the incoming one; at the last module the outgoing map must be
        injective.
        """
        if not self.maps:
            return True
        p = self.maps[0].prime
        nv = self.maps[0].num_vars
        window = window if window is not None else self.default_window()
        for d in window:
            for k in range(1, self.length + 1):
                fk = self.module_twists(k)
                dim_fk = free_piece_dimension(nv, fk, d)
                rank_out = rank_mod(self.maps[k - 1].degree_piece(d), p)
                kernel = dim_fk - rank_out
                rank_in = (rank_mod(self.maps[k].degree_piece(d), p)
                           if k < self.length else 0)
                if kernel != rank_in:
                    return False
        return True


def syzygy_map(gm: GradedMap) -> GradedMap:
    """Presentation of the kernel of the map defined by the columns of gm.

    The returned map's target is gm's source; composing gm with it gives
    zero.  Raises on inhomogeneous input (via the Groebner layer).
    """
    syz, syz_degs = groebner.syzygies(gm.column_vectors(), gm.target_twists,
                                      gm.prime, gm.num_vars,
                                      degrees=gm.source_twists)
    return GradedMap.from_column_vectors(gm.prime, gm.num_vars,
                                         gm.source_twists, syz, syz_degs)


def free_resolution(module: GradedModule, max_length=None) -> FreeResolution:
    """Minimal free resolution of the module, of length at most max_length.

    The default cap (num_vars + 1) always suffices; the minimal chain
    terminates by homological index num_vars.
    """
    p = module.prime
    nv = module.num_vars
    cap = max_length if max_length is not None else nv + 1
    pres = _MapData.from_map(module.presentation)
    _minimalize_last(pres, None, p)
    chain = [pres]
    while chain[-1].st and len(chain) < max(cap, 1):
        last = chain[-1]
        cols = last.to_map(p, nv).column_vectors()
        syz, syz_degs = groebner.syzygies(cols, tuple(last.tt), p, nv,
                                          degrees=tuple(last.st))
        if not syz:
            break
        # nxt.tt starts equal to last.st; unit cancellation deletes from
        # both in lockstep, keeping the chain composable
        nxt = _MapData(list(last.st), syz_degs, _vectors_to_rows(
            syz, len(last.st), nv, p))
        _minimalize_last(nxt, last, p)
        if not nxt.st:
            break
        chain.append(nxt)
    f0 = tuple(pres.tt)
    maps = [md.to_map(p, nv) for md in chain]
    while maps and maps[-1].source_rank == 0:
        maps.pop()
    res = FreeResolution(f0, tuple(maps))
    if max_length is None and res.length > nv:
        raise AssertionError(
            f"resolution length {res.length} exceeds the syzygy bound {nv}")
    return res


def _vectors_to_rows(vectors, rank, num_vars, p):
    rows = []
    for r in range(rank):
        row = []
        for vec in vectors:
            terms = {exps: v for (exps, comp), v in vec.items() if comp == r}
            row.append(MultiPoly(num_vars, p, terms))
        rows.append(row)
    return rows


def minimal_resolution(module: GradedModule) -> FreeResolution:
    res = module._cache.get("resolution")
    if res is None:
        res = free_resolution(module)
        module._cache["resolution"] = res
    return res


# -- Hilbert polynomial ------------------------------------------------------

def _binomial_poly_coeffs(shift: int, m: int):
    """Coefficients of C(d + shift, m) as a polynomial in d, exact."""
    coeffs = [Fraction(1)]
    for k in range(m):
        # multiply by (d + shift - k)
        root = shift - k
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += c * root
            new[i + 1] += c
        coeffs = new
    f = Fraction(1, factorial(m)) if m else Fraction(1)
    return [c * f for c in coeffs]


def hilbert_polynomial(module: GradedModule):
    """Coefficients (ascending) of the Hilbert polynomial of the module.

    Equals the Euler characteristic of the twisted sheafification at every
    integer, and the Hilbert function in all large degrees.
    """
    cached = module._cache.get("hilbert_poly")
    if cached is not None:
        return cached
    res = minimal_resolution(module)
    nv = module.num_vars
    n = nv - 1
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(res.length + 1):
        sign = -1 if k % 2 else 1
        for t in res.module_twists(k):
            for i, c in enumerate(_binomial_poly_coeffs(n - t, n)):
                coeffs[i] += sign * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    out = tuple(coeffs)
    module._cache["hilbert_poly"] = out
    return out


def evaluate_polynomial(coeffs, d: int):
    total = Fraction(0)
    for i, c in enumerate(reversed(coeffs)):
        total = total * d + c
    return total


def sheaf_is_zero(module: GradedModule) -> bool:
    """True when the sheafification vanishes (finite-length module)."""
    return not hilbert_polynomial(module)


def generic_rank(module: GradedModule) -> int:
    """Rank of the sheafification, from the Hilbert polynomial's top term."""
    coeffs = hilbert_polynomial(module)
    n = module.num_vars - 1
    if len(coeffs) < n + 1:
        return 0
    r = coeffs[n] * factorial(n)
    if r.denominator != 1:
        raise AssertionError("Hilbert polynomial top term is not integral")
    return int(r)
