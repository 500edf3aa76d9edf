"""Multiplicity-free decompositions attached to a length-3 format.

The central objects are indexed by sextuples mu = (a, b, c, alpha, beta,
gamma) with b, c natural numbers and alpha, beta, gamma partitions with at
most r_3-1, r_2-1, r_1-1 parts.  Each sextuple produces a quadruple of
GL-weights on F_3, F_2, F_1, F_0, and — through the lambda-dictionary — a
weight of the star graph T_{p,q,r}.  Everything here is exact enumeration
and bookkeeping; no ring structure is modeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Dict, List, Optional, Sequence, Tuple

from .formats import ResolutionFormat, classify_format
from .kacmoody import TpqrGraph, weyl_dim
from .schur import is_dominant, partitions_bounded, schur_dim

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class MuIndex:
    a: int
    b: int
    c: int
    alpha: Tuple[int, ...] = ()
    beta: Tuple[int, ...] = ()
    gamma: Tuple[int, ...] = ()

    def total(self) -> int:
        return self.a + self.b + self.c + sum(self.alpha) + sum(self.beta) + sum(self.gamma)

    def sort_key(self):
        return (self.total(), self.a, self.b, self.c, self.alpha, self.beta, self.gamma)


def _check_mu(mu: MuIndex, fmt: ResolutionFormat) -> None:
    if fmt.n != 3:
        raise ValueError("length-3 formats only")
    r1, r2, r3 = fmt.r
    if mu.b < 0 or mu.c < 0:
        raise ValueError("b, c must be nonnegative")
    for name, part, bound in (("alpha", mu.alpha, r3 - 1), ("beta", mu.beta, r2 - 1), ("gamma", mu.gamma, r1 - 1)):
        if len(part) > bound:
            raise ValueError(f"{name} has {len(part)} parts, at most {bound} allowed")
        if any(part[i] < part[i + 1] for i in range(len(part) - 1)) or any(x < 0 for x in part):
            raise ValueError(f"{name} is not a partition: {part}")


def _padded(part: Sequence[int], length: int) -> Tuple[int, ...]:
    return tuple(part) + (0,) * (length - len(part))


@dataclass(frozen=True)
class GLWeightQuadruple:
    """Weights on F_3, F_2, F_1, F_0 (in that order)."""

    w3: Weight
    w2: Weight
    w1: Weight
    w0: Weight

    @property
    def weights(self) -> Tuple[Weight, Weight, Weight, Weight]:
        return (self.w3, self.w2, self.w1, self.w0)

    @property
    def dominant(self) -> bool:
        return all(is_dominant(w) for w in self.weights)

    @property
    def even(self) -> Tuple[Weight, Weight]:
        return (self.w0, self.w2)

    @property
    def odd(self) -> Tuple[Weight, Weight]:
        return (self.w1, self.w3)


def ra_component(mu: MuIndex, fmt: ResolutionFormat) -> GLWeightQuadruple:
    """The GL-weight quadruple of the component of R_a indexed by mu.

    w3 = (A+alpha_1, ..., A+alpha_{r3-1}, A)                    with A = a-b+c,
    w2 = (B+beta_1, ..., B+beta_{r2-1}, B, -A, -A-alpha_{r3-1}, ..., -A-alpha_1)
                                                                with B = b-c,
    w1 = (c+gamma_1, ..., c+gamma_{r1-1}, c, c-b, c-b-beta_{r2-1}, ..., c-b-beta_1),
    w0 = (0^{r0}, -c, -c-gamma_{r1-1}, ..., -c-gamma_1).
    """
    _check_mu(mu, fmt)
    r1, r2, r3 = fmt.r
    r0 = fmt.r0
    a, b, c = mu.a, mu.b, mu.c
    al = _padded(mu.alpha, r3 - 1)
    be = _padded(mu.beta, r2 - 1)
    ga = _padded(mu.gamma, r1 - 1)
    A = a - b + c
    B = b - c
    w3 = tuple(A + x for x in al) + (A,)
    w2 = tuple(B + x for x in be) + (B, -A) + tuple(-A - x for x in reversed(al))
    w1 = tuple(c + x for x in ga) + (c, c - b) + tuple(c - b - x for x in reversed(be))
    w0 = (0,) * r0 + (-c,) + tuple(-c - x for x in reversed(ga))
    quad = GLWeightQuadruple(w3=w3, w2=w2, w1=w1, w0=w0)
    # Given naturals b, c and partitions, weak decrease of all four weights is
    # equivalent to a >= 0 (the only cross-block comparison that can fail is
    # B >= -A inside w2, i.e. a >= 0).
    assert quad.dominant == (a >= 0), (mu, quad)
    return quad


def in_ra(mu: MuIndex, fmt: ResolutionFormat) -> bool:
    """Membership in the weight semigroup of R_a: all weights weakly
    decreasing and the F_3 weight polynomial (last entry a-b+c >= 0)."""
    quad = ra_component(mu, fmt)
    return quad.dominant and (mu.a - mu.b + mu.c) >= 0


def in_rspec(mu: MuIndex, fmt: ResolutionFormat) -> bool:
    """Membership in the weight semigroup of the special-fiber ring: a >= 0."""
    _check_mu(mu, fmt)
    return mu.a >= 0


def ra_general_component(
    x: Sequence[int], partitions: Sequence[Sequence[int]], fmt: ResolutionFormat
) -> List[Weight]:
    """Length-n decomposition data: weights on F_0..F_n built from degrees
    x = (x^(1), ..., x^(n)) and partitions alpha^(1..n) (alpha^(i) with at
    most r_i - 1 parts) via the partial Euler characteristics
    chi^(i) = sum_{j<=i} (-1)^{i-j} x^(j)."""
    n = fmt.n
    if len(x) != n or len(partitions) != n:
        raise ValueError(f"need {n} degrees and {n} partitions")
    if any(v < 0 for v in x):
        raise ValueError("degrees must be nonnegative")
    r = (0,) + fmt.r  # r[i] = r_i, 1-based
    pads = [()]  # alpha^(0) unused
    for i in range(1, n + 1):
        part = tuple(partitions[i - 1])
        if len(part) > r[i] - 1:
            raise ValueError(f"partition {i} has too many parts")
        pads.append(_padded(part, r[i] - 1))
    chi = [0] * (n + 2)  # chi[i], chi[n+1] = 0
    for i in range(1, n + 1):
        chi[i] = sum((-1) ** (i - j) * x[j - 1] for j in range(1, i + 1))
    for i in range(1, n):
        assert chi[i] + chi[i + 1] == x[i], "partial Euler characteristic identity"
    out: List[Weight] = []
    for i in range(0, n + 1):
        if i == 0:
            first: Tuple[int, ...] = (0,) * fmt.r0
        else:
            first = tuple(chi[i] + v for v in pads[i]) + (chi[i],)
        if i == n:
            second: Tuple[int, ...] = ()
        else:
            second = (-chi[i + 1],) + tuple(-chi[i + 1] - v for v in reversed(pads[i + 1]))
        out.append(first + second)
    return out


def mu_enumerate(fmt: ResolutionFormat, cutoff: int) -> List[MuIndex]:
    """All sextuples with a >= 0 and a+b+c+|alpha|+|beta|+|gamma| <= cutoff,
    in deterministic (multidegree, lexicographic) order."""
    r1, r2, r3 = fmt.r
    out = []
    parts3 = list(partitions_bounded(r3 - 1, cutoff))
    parts2 = list(partitions_bounded(r2 - 1, cutoff))
    parts1 = list(partitions_bounded(r1 - 1, cutoff))
    for a in range(cutoff + 1):
        for b in range(cutoff + 1 - a):
            for c in range(cutoff + 1 - a - b):
                rest = cutoff - a - b - c
                for al in parts3:
                    if sum(al) > rest:
                        continue
                    for be in parts2:
                        if sum(al) + sum(be) > rest:
                            continue
                        for ga in parts1:
                            if sum(al) + sum(be) + sum(ga) > rest:
                                continue
                            out.append(MuIndex(a, b, c, tuple(al), tuple(be), tuple(ga)))
    out.sort(key=lambda m: m.sort_key())
    return out


def ra_enumerate(
    fmt: ResolutionFormat, cutoff: int
) -> List[Tuple[MuIndex, GLWeightQuadruple]]:
    """All R_a components within the cutoff; asserts multiplicity-freeness
    and injectivity of the even (F_0, F_2) and odd (F_1, F_3) projections."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    out = [
        (mu, ra_component(mu, fmt))
        for mu in mu_enumerate(fmt, cutoff)
        if in_ra(mu, fmt)
    ]
    quads = [q.weights for _, q in out]
    assert len(set(quads)) == len(quads), "multiplicity-freeness violated"
    evens = [q.even for _, q in out]
    odds = [q.odd for _, q in out]
    assert len(set(evens)) == len(evens), "even projection not injective"
    assert len(set(odds)) == len(odds), "odd projection not injective"
    return out


# ---------------------------------------------------------------------------
# Homology of the almost-acyclic complex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyReport:
    components: List[Tuple[Weight, ...]]
    minimal_generator: Optional[Tuple[Weight, ...]]


def _homology_weights_for(
    fmt: ResolutionFormat, j: int, y: Sequence[int], partitions: Sequence[Sequence[int]]
) -> Tuple[Weight, ...]:
    """Weights on F_0..F_n of the homology candidate: the generic display
    with one box added at position r_{j-1}+1 of the F_{j-1} weight."""
    weights = ra_general_component(y, partitions, fmt)
    target = list(weights[j - 1])
    pos = (fmt.r0 if j - 1 == 0 else fmt.r[j - 2])  # length of the first block
    target[pos] += 1
    weights[j - 1] = tuple(target)
    return tuple(weights)


def homology_weights(fmt: ResolutionFormat, j: int, cutoff: int) -> HomologyReport:
    """Components of H_{j-1} of the almost-acyclic complex of the format,
    within the cutoff on sum of degrees and partition sizes.

    H_n and H_{n-1} vanish; for 1 <= j-1 <= n-2 the components are indexed by
    degrees y^(1..n) with y^(j+1) = 0 and partitions, subject to dominance of
    all weights.
    """
    n = fmt.n
    if j - 1 > n or j < 1:
        raise ValueError(f"j = {j} out of range")
    if j - 1 in (n, n - 1):
        return HomologyReport(components=[], minimal_generator=None)
    if not 1 <= j - 1 <= n - 2:
        raise ValueError(f"j = {j} out of range (need 1 <= j-1 <= n-2)")
    r = (0,) + fmt.r
    components = []
    part_lists = [list(partitions_bounded(r[i] - 1, cutoff)) for i in range(1, n + 1)]
    degree_ranges = [
        [0] if i == j + 1 else list(range(cutoff + 1)) for i in range(1, n + 1)
    ]
    for ys in iproduct(*degree_ranges):
        if sum(ys) > cutoff:
            continue
        budget = cutoff - sum(ys)
        for parts in iproduct(*part_lists):
            if sum(sum(p) for p in parts) > budget:
                continue
            weights = _homology_weights_for(fmt, j, ys, parts)
            if all(is_dominant(w) for w in weights):
                components.append(weights)
    components.sort()
    # Minimal generator: beta = 0, psi^(i) = (-1)^{j-1-i} for i <= j-1, else 0.
    psi = [0] * (n + 1)
    for i in range(1, j):
        psi[i] = (-1) ** (j - 1 - i)
    ys_min = [psi[i] + psi[i - 1] if i >= 2 else psi[1] for i in range(1, n + 1)]
    assert all(v >= 0 for v in ys_min) and ys_min[j] == 0  # y^(j+1) = 0
    gen = _homology_weights_for(fmt, j, ys_min, [()] * n)
    # Up to maximal exterior powers of the other F_i, the generator is the
    # (r_{j-1}+1)-st exterior power of F_{j-1}.
    f_len = len(gen[j - 1])
    expected = (1,) * (fmt.r[j - 2] + 1) + (0,) * (f_len - fmt.r[j - 2] - 1)
    assert gen[j - 1] == expected, (gen[j - 1], expected)
    for idx, w in enumerate(gen):
        if idx == j - 1:
            continue
        blocks = set(w)
        assert len(blocks) <= 2, f"non-exterior twist on F_{idx}: {w}"
    return HomologyReport(components=components, minimal_generator=gen)


# ---------------------------------------------------------------------------
# The special-fiber decomposition and the lambda-dictionary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RspecComponent:
    sigma: Weight
    tau: Weight
    theta: Weight
    phi: Weight
    lam: Tuple[int, ...]  # labels on T_{p,q,r} vertices (internal 0-based order)


def lambda_from_sigma_tau(
    graph: TpqrGraph, sigma: Sequence[int], tau: Sequence[int], z1_label: int,
    z_arm_ascending: bool = False,
) -> Tuple[int, ...]:
    """Labels on T_{p,q,r}: chain labels are consecutive differences of tau
    (x_i -> tau_{p-i} - tau_{p-i+1}, u -> tau_p - tau_{p+1},
    y_j -> tau_{p+j} - tau_{p+j+1}), the z_1 label is given, and the rest of
    the z-arm reads consecutive differences of sigma — by default in the
    descending-index orientation z_{1+i} -> sigma_{r-1-i} - sigma_{r-i},
    or ascending (z_{1+i} -> sigma_i - sigma_{i+1}) when requested."""
    p, q, r = graph.p, graph.q, graph.r
    if len(tau) != p + q:
        raise ValueError(f"tau must have length {p + q}")
    if len(sigma) != r - 1:
        raise ValueError(f"sigma must have length {r - 1}")
    labels = [0] * graph.n
    labels[graph.u] = tau[p - 1] - tau[p]
    for i in range(1, p):
        labels[graph.x(i)] = tau[p - i - 1] - tau[p - i]
    for j in range(1, q):
        labels[graph.y(j)] = tau[p + j - 1] - tau[p + j]
    labels[graph.z1] = z1_label
    for i in range(1, r - 1):
        if z_arm_ascending:
            labels[graph.z(1 + i)] = sigma[i - 1] - sigma[i]
        else:
            labels[graph.z(1 + i)] = sigma[r - 2 - i] - sigma[r - 1 - i]
    return tuple(labels)


def rspec_component(mu: MuIndex, fmt: ResolutionFormat) -> RspecComponent:
    """The (sigma, tau, theta, phi) weights and the T_{p,q,r} weight lambda
    of the special-fiber component indexed by mu (requires a >= 0)."""
    _check_mu(mu, fmt)
    if mu.a < 0:
        raise ValueError("membership requires a >= 0")
    quad = ra_component(mu, fmt)
    sigma, theta, tau, phi = quad.w3, quad.w2, quad.w1, quad.w0
    graph = TpqrGraph(*fmt.pqr)
    lam = lambda_from_sigma_tau(graph, sigma, tau, mu.a)
    assert all(v >= 0 for v in lam), "lambda must be dominant when a >= 0"
    # Round trip: chain differences plus the anchor tau_{p+q} = c - b - beta_1
    # reconstruct tau exactly.
    p, q = graph.p, graph.q
    be = _padded(mu.beta, fmt.r[1] - 1)
    anchor = mu.c - mu.b - (be[0] if be else 0)
    rebuilt = [anchor]
    chain = (
        [lam[graph.y(j)] for j in range(q - 1, 0, -1)]
        + [lam[graph.u]]
        + [lam[graph.x(i)] for i in range(1, p)]
    )
    for d in chain:
        rebuilt.append(rebuilt[-1] + d)
    assert tuple(reversed(rebuilt)) == tau, (rebuilt, tau)
    return RspecComponent(sigma=sigma, tau=tau, theta=theta, phi=phi, lam=lam)


# ---------------------------------------------------------------------------
# Semigroup generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorFamily:
    number: int
    description: str
    members: Tuple[MuIndex, ...]
    interpretation: str
    note: Optional[str] = None

    @property
    def present(self) -> bool:
        return bool(self.members)


def semigroup_generators(fmt: ResolutionFormat) -> List[GeneratorFamily]:
    """The six generator families of the weight semigroup, with empty-range
    families reported as absent."""
    if fmt.n != 3 or not fmt.valid:
        raise ValueError("valid length-3 formats only")
    r1, r2, r3 = fmt.r
    fam = []
    fam.append(
        GeneratorFamily(
            1,
            "alpha = (1^i), 1 <= i <= r_3-1",
            tuple(MuIndex(0, 0, 0, alpha=(1,) * i) for i in range(1, r3)),
            "first graded component is d_3; later components are the structure maps p_i",
            note=None if r3 > 1 else "absent: r_3 = 1",
        )
    )
    fam.append(
        GeneratorFamily(
            2,
            "a = 1",
            (MuIndex(1, 0, 0),),
            "top exterior power of F_2 against V(omega_{z_1}); minors of (d_3, p_1)"
            + ("; includes d_3, p_1 components when r_3 = 1" if r3 == 1 else ""),
        )
    )
    fam.append(
        GeneratorFamily(
            3,
            "beta = (1^j), 1 <= j <= r_2-1",
            tuple(MuIndex(0, 0, 0, beta=(1,) * j) for j in range(1, r2)),
            "first graded component is d_2; later components w_0, w_1, ... "
            "(multiplicative structure when r_1 = 1)",
            note=None if r2 > 1 else "absent: r_2 = 1",
        )
    )
    fam.append(
        GeneratorFamily(
            4,
            "b = 1",
            (MuIndex(0, 1, 0),),
            "V(omega_{x_1}); for r_1 = 1 the components are a_2 and p'_1",
        )
    )
    fam.append(
        GeneratorFamily(
            5,
            "gamma = (1^k), 1 <= k <= r_1-1",
            tuple(MuIndex(0, 0, 1, gamma=(1,) * k) for k in range(1, r1)),
            "F_0^* against V(omega_{x_{p-1}})",
            note=None if r1 > 1 else "absent: r_1 = 1",
        )
    )
    fam.append(
        GeneratorFamily(
            6,
            "c = 1",
            (MuIndex(0, 0, 1),),
            "top exterior power of F_0^* against V(omega_{x_1}); a_1 when r_1 = 1",
        )
    )
    return fam


# ---------------------------------------------------------------------------
# K*(sigma, tau, t) terms and the dictionary crosscheck
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KStarComplex:
    """The four terms (bottom to top) of the dualized isotypic component,
    each an (F_3 weight, F_1-dual weight) pair tensored with an opaque
    universal-enveloping factor."""

    bottom: Tuple[Weight, Weight]
    middle: Tuple[Weight, Weight]
    top_u: Tuple[Weight, Weight]
    top_s: Optional[Tuple[Weight, Weight]]
    s: int
    u: int
    t: int
    tensor_factor: str = "U(L)"

    @property
    def terms(self) -> List[Tuple[str, Tuple[Weight, Weight]]]:
        out = [("bottom", self.bottom), ("middle", self.middle), ("top_u", self.top_u)]
        if self.top_s is not None:
            out.append(("top_s", self.top_s))
        return out


def kstar_terms(
    sigma: Sequence[int], tau: Sequence[int], t: int, fmt: ResolutionFormat
) -> KStarComplex:
    """The four terms of the dual isotypic complex for (sigma, tau, t):

    bottom: (sigma; tau)
    middle: (sigma_1+t, ...; tau_1+t, ..., tau_{r1+1}+t, rest)
    top_u:  (sigma_1+t+u, ...; tau_1+t+u, ..., tau_{r1}+t+u, tau_{r1+1}+t,
             tau_{r1+2}+u, rest)
    top_s:  (sigma_1+t, sigma_2+s, ...; tau_1+t+s, ..., tau_{r1+1}+t+s, rest)
            — omitted when r_3 = 1 (no sigma_2).
    with s = sigma_1 + 1 - sigma_2 and u = tau_{r1+1} + 1 - tau_{r1+2}.
    """
    r1, r2, r3 = fmt.r
    sigma = tuple(sigma)
    tau = tuple(tau)
    if len(sigma) != r3:
        raise ValueError(f"sigma must have length r_3 = {r3}")
    if len(tau) != r1 + r2:
        raise ValueError(f"tau must have length r_1 + r_2 = {r1 + r2}")
    if not is_dominant(sigma) or not is_dominant(tau):
        raise ValueError("sigma and tau must be dominant")
    if t < 1:
        raise ValueError("t must be >= 1")
    u = tau[r1] + 1 - tau[r1 + 1]
    bottom = (sigma, tau)
    middle = (
        (sigma[0] + t,) + sigma[1:],
        tuple(x + t for x in tau[: r1 + 1]) + tau[r1 + 1 :],
    )
    top_u = (
        (sigma[0] + t + u,) + sigma[1:],
        tuple(x + t + u for x in tau[:r1])
        + (tau[r1] + t, tau[r1 + 1] + u)
        + tau[r1 + 2 :],
    )
    if r3 >= 2:
        s = sigma[0] + 1 - sigma[1]
        top_s = (
            (sigma[0] + t, sigma[1] + s) + sigma[2:],
            tuple(x + t + s for x in tau[: r1 + 1]) + tau[r1 + 1 :],
        )
    else:
        s = sigma[0] + 1  # formal value; the summand itself collapses
        top_s = None
    return KStarComplex(bottom=bottom, middle=middle, top_u=top_u, top_s=top_s, s=s, u=u, t=t)


def dictionary_crosscheck(
    sigma: Sequence[int],
    tau: Sequence[int],
    t: int,
    fmt: ResolutionFormat,
    break_u_by: int = 0,
) -> bool:
    """The K* terms equal the three-layer BGG initial terms through the
    lambda-dictionary.

    Each K* term, mapped through the dictionary with its own z_1 label
    (t-1, -t-1, -t-1-u, -t-1-s for bottom/middle/top_u/top_s), must equal the
    corresponding parabolic Verma highest weight (identity, s_{z1},
    s_{z1}s_u, s_{z1}s_{z2} dot-applied to lambda).  The z-arm is read in the
    ascending-sigma orientation, under which the match is exact for all arm
    lengths.  `break_u_by` perturbs the u-parameter (for must-fail tests).
    """
    from .kacmoody import bgg_initial_terms

    ks = kstar_terms(sigma, tau, t, fmt)
    graph = TpqrGraph(*fmt.pqr)
    a = t - 1
    lam = lambda_from_sigma_tau(graph, tuple(sigma), tau, a, z_arm_ascending=True)
    layers = bgg_initial_terms(graph, lam)
    u = ks.u + break_u_by
    expected = [
        (ks.bottom, t - 1),
        (ks.middle, -t - 1),
        (
            (
                (sigma[0] + t + u,) + tuple(sigma[1:]),
                tuple(x + t + u for x in tau[: fmt.r[0]])
                + (tau[fmt.r[0]] + t, tau[fmt.r[0] + 1] + u)
                + tuple(tau[fmt.r[0] + 2 :]),
            ),
            -t - 1 - u,
        ),
    ]
    if ks.top_s is not None:
        expected.append((ks.top_s, -t - 1 - ks.s))
    bgg = [layers[0][0], layers[1][0]] + list(layers[2])
    if len(bgg) != len(expected):
        return False
    for weight, ((sig_term, tau_term), z1lab) in zip(bgg, expected):
        mapped = lambda_from_sigma_tau(graph, sig_term, tau_term, z1lab, z_arm_ascending=True)
        if mapped != weight:
            return False
    return True


# ---------------------------------------------------------------------------
# Hilbert-series truncation
# ---------------------------------------------------------------------------


def hilbert_truncation(
    fmt: ResolutionFormat, cutoff: int
) -> Dict[Tuple[int, int, int, int, int, int], int]:
    """Graded dimensions of the special-fiber ring by multidegree
    (a, b, c, |alpha|, |beta|, |gamma|), each cell the product
    dim S_phi(F_0) * dim S_theta(F_2) * dim V(lambda).  Finite class only."""
    if not classify_format(fmt).finite:
        raise ValueError("Finite class required")
    graph = TpqrGraph(*fmt.pqr)
    table: Dict[Tuple[int, int, int, int, int, int], int] = {}
    for mu in mu_enumerate(fmt, cutoff):
        comp = rspec_component(mu, fmt)
        d = (
            schur_dim(comp.phi, fmt.f[0])
            * schur_dim(comp.theta, fmt.f[2])
            * weyl_dim(graph, comp.lam)
        )
        key = (mu.a, mu.b, mu.c, sum(mu.alpha), sum(mu.beta), sum(mu.gamma))
        table[key] = table.get(key, 0) + d
    return table
