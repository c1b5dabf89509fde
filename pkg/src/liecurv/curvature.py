"""Closed-form connection and curvature for left-invariant metrics.

Everything is generic over a CartanStructure s: the connection is

    nabla(u, v) = 1/2 ([u, v] - [u, theta v] - [v, theta u])

and the quartic form <R(u,v)v, u> has the closed expression

    -2 ||[u1, v1]||^2 + 1/4 ||[u, v]||^2 + 2 <[u1, v1], [u2, v2]>

where u1/u2 are the p/k eigencomponents of u under theta and all inner
products are B_theta. quartic always evaluates this general expression; the
special-case formulas (pure-class pairs, mixed-by-pure pairs, commuting
pairs) live in separate functions so they can be cross-checked against it
rather than replace it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MatrixElement, bracket
from .cartan import CartanStructure, pure_class, theta_split
from .errors import DegenerateSection, NotCommuting, NotPureType

# A 2-plane is rejected as degenerate when its squared area falls below this
# multiple of ||u||^2 ||v||^2.
DEGENERATE_AREA_RTOL = 1e-12

# Default relative tolerance on the commutator norm in quartic_commuting.
COMMUTING_RTOL = 1e-10

PURITY_RTOL = 1e-10


@dataclass(frozen=True)
class SectionReport:
    """Curvature data of the 2-plane spanned by u and v.

    quartic is <R(u,v)v, u>; area_sq is <u,u><v,v> - <u,v>^2; sectional is
    their ratio. term_pp, term_mixed, term_cross are the three summands of
    the general formula and add up to quartic exactly (the implementation
    computes quartic as their sum).
    """

    quartic: float
    area_sq: float
    sectional: float
    term_pp: float
    term_mixed: float
    term_cross: float

    def as_dict(self) -> dict:
        return {"quartic": self.quartic, "area_sq": self.area_sq,
                "sectional": self.sectional, "term_pp": self.term_pp,
                "term_mixed": self.term_mixed, "term_cross": self.term_cross}


def nabla(s: CartanStructure, u: MatrixElement, v: MatrixElement) -> MatrixElement:
    """Covariant derivative of the left-invariant field v along u at the identity."""
    s.check_member(u)
    s.check_member(v)
    return 0.5 * (bracket(u, v) - bracket(u, s.theta(v)) - bracket(v, s.theta(u)))


def nabla_case(s: CartanStructure, u: MatrixElement,
               v: MatrixElement) -> tuple[MatrixElement, str]:
    """Piecewise form of nabla for inputs that are purely p or purely k.

    Returns the value together with the case tag that fired: the coefficient
    on [u, v] is 1/2 for p_p and k_k, -1/2 for p_k, 3/2 for k_p. Raises
    NotPureType if either argument mixes the classes beyond tolerance.
    """
    cu = pure_class(s, u, rtol=PURITY_RTOL)
    cv = pure_class(s, v, rtol=PURITY_RTOL)
    coeff = {("p", "p"): 0.5, ("k", "k"): 0.5,
             ("p", "k"): -0.5, ("k", "p"): 1.5}[(cu, cv)]
    return coeff * bracket(u, v), f"{cu}_{cv}"


def curvature_tensor(s: CartanStructure, u: MatrixElement, v: MatrixElement,
                     w: MatrixElement) -> MatrixElement:
    """R(u, v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w."""
    return (nabla(s, u, nabla(s, v, w))
            - nabla(s, v, nabla(s, u, w))
            - nabla(s, bracket(u, v), w))


def quartic_terms(s: CartanStructure, u: MatrixElement,
                  v: MatrixElement) -> tuple[float, float, float]:
    """The three summands of the general quartic formula, in order
    (-2||[u1,v1]||^2, 1/4||[u,v]||^2, 2<[u1,v1],[u2,v2]>)."""
    su, sv = theta_split(s, u), theta_split(s, v)
    b11 = bracket(su.p_part, sv.p_part)
    b22 = bracket(su.k_part, sv.k_part)
    buv = bracket(u, v)
    return (-2.0 * s.b_theta(b11, b11),
            0.25 * s.b_theta(buv, buv),
            2.0 * s.b_theta(b11, b22))


def quartic(s: CartanStructure, u: MatrixElement, v: MatrixElement) -> float:
    """<R(u,v)v, u> by the general closed formula."""
    t1, t2, t3 = quartic_terms(s, u, v)
    return t1 + t2 + t3


def sectional(s: CartanStructure, u: MatrixElement, v: MatrixElement) -> SectionReport:
    """Sectional curvature of span{u, v} with the full term breakdown.

    Raises DegenerateSection when the squared area of the parallelogram is at
    or below DEGENERATE_AREA_RTOL * ||u||^2 ||v||^2 (nearly dependent inputs
    make the ratio meaningless).
    """
    t1, t2, t3 = quartic_terms(s, u, v)
    q = t1 + t2 + t3
    uu, vv, uv = s.b_theta(u, u), s.b_theta(v, v), s.b_theta(u, v)
    area_sq = uu * vv - uv * uv
    if area_sq <= DEGENERATE_AREA_RTOL * uu * vv:
        raise DegenerateSection(
            f"squared area {area_sq:.3g} is below {DEGENERATE_AREA_RTOL:g} * "
            f"||u||^2 ||v||^2 = {DEGENERATE_AREA_RTOL * uu * vv:.3g}")
    return SectionReport(quartic=q, area_sq=area_sq, sectional=q / area_sq,
                         term_pp=t1, term_mixed=t2, term_cross=t3)


def quartic_special(s: CartanStructure, u: MatrixElement,
                    v: MatrixElement) -> tuple[float, str]:
    """Special-case value of the quartic form, dispatched on purity.

    v must be purely p or purely k (NotPureType otherwise). When u is also
    pure the four pure cases fire (tags p_p, k_k, p_k, k_p); for mixed u the
    tag is g_p or g_k. The returned value agrees with quartic(s, u, v); this
    function exists as a cross-check, not a fast path.
    """
    cv = pure_class(s, v, rtol=PURITY_RTOL)
    try:
        cu = pure_class(s, u, rtol=PURITY_RTOL)
    except NotPureType:
        cu = "g"

    def nsq(x: MatrixElement) -> float:
        return s.b_theta(x, x)

    if cu == "g":
        su = theta_split(s, u)
        if cv == "p":
            value = (-1.75 * nsq(bracket(su.p_part, v))
                     + 0.25 * nsq(bracket(su.k_part, v)))
        else:
            value = 0.25 * nsq(bracket(u, v))
    elif (cu, cv) == ("p", "p"):
        value = -1.75 * nsq(bracket(u, v))
    else:
        # k_k, p_k and k_p all carry the coefficient +1/4
        value = 0.25 * nsq(bracket(u, v))
    return value, f"{cu}_{cv}"


def quartic_commuting(s: CartanStructure, u: MatrixElement, v: MatrixElement,
                      tol: float = COMMUTING_RTOL) -> float:
    """Quartic form for a commuting pair: -4 ||[u1, v1]||^2.

    Raises NotCommuting when ||[u, v]|| > tol * (||u|| ||v|| + 1). The value
    agrees with quartic(s, u, v) whenever the precondition holds.
    """
    bn = s.norm(bracket(u, v))
    allowed = tol * (s.norm(u) * s.norm(v) + 1.0)
    if bn > allowed:
        raise NotCommuting(
            f"||[u, v]|| = {bn:.3g} exceeds {allowed:.3g}; pair does not commute")
    b11 = bracket(theta_split(s, u).p_part, theta_split(s, v).p_part)
    return -4.0 * s.b_theta(b11, b11)


def bracket_norm_identity_gap(s: CartanStructure, u: MatrixElement,
                              v: MatrixElement) -> float:
    """LHS - RHS of the commutator-norm decomposition

        ||[u,v]||^2 = ||[u,v1]||^2 + ||[u,v2]||^2 - 2 <[v1,v2], [u1,u2]>

    (a diagnostic; the gap should vanish to rounding on any inputs)."""
    su, sv = theta_split(s, u), theta_split(s, v)

    def nsq(x: MatrixElement) -> float:
        return s.b_theta(x, x)

    lhs = nsq(bracket(u, v))
    rhs = (nsq(bracket(u, sv.p_part)) + nsq(bracket(u, sv.k_part))
           - 2.0 * s.b_theta(bracket(sv.p_part, sv.k_part),
                             bracket(su.p_part, su.k_part)))
    return lhs - rhs
