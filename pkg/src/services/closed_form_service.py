"""Closed-form A_alpha spectra of the six corona products with known factorizations.

For an r1-regular G1 the characteristic polynomial of every composite splits
into one factor per adjacency eigenvalue mu of G1, a factor per G2 copy and,
for the total and Q coronas, a power of a prefix factor. With
``b = 1 - alpha`` and ``s = mu + r1`` the per-mu factors are

    total                    (t - b*s)(lam - (2r1+n2)a - b*mu - b^2*G) - b^2*s
    q_vertex                 (t - b*s)(lam - a(r1+n2) - b^2*G) - b^2*s
    splitting                (lam - a(2r1+n2) - b^2*G - b*mu)(lam - a*r1) - b^2*mu^2
    splitting_add_vertex     (lam - 2a*r1 - b*mu)(lam - a(r1+n2) - b^2*G) - b^2*mu^2
    splitting_neighbourhood  (lam - a(2+n2)r1 - b*mu - b^2*G*mu^2)(lam - a*r1) - b^2*mu^2
    q_edge                   u*w - b(u+b)*s

where ``t = lam - 2a*r1 + 2b``, ``u = lam - a*r1``,
``w = lam - a(2r1+n2) - b^2*G + 2b`` and ``G`` is the coronal of A_alpha(G2)
at ``lam - c``. The copy shift ``c`` is ``a*r1`` for the splitting
neighbourhood corona and ``a`` otherwise.
"""

import logging
import math
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict

from src.lib.config import get_settings
from src.lib.errors import FormulaCountError, GraphValidationError, PoleError, RegularityError
from src.models.graph import CoronaKind, Graph
from src.models.reports import (
    EigenFamily,
    PredictionReport,
    RealPolynomial,
    RegularSpec,
    VerifyCell,
)
from src.models.spectrum import Alpha, Spectrum
from src.services.corona_service import compose, composite_order, copy_count
from src.services.graph_service import degree_info
from src.services.spectra_service import (
    AlphaLike,
    a_alpha_matrix,
    charpoly_oracle,
    m_coronal,
    regular_spec,
    spectral_radius,
    sym_eigenvalues,
)

logger = logging.getLogger(__name__)

Number = Union[float, Polynomial]

_LAMBDA = Polynomial([0.0, 1.0])
_CLUSTER_TOL = 1e-6
_IMAG_TOL = 1e-5
_RESIDUAL_TOL = 1e-10
_NEWTON_STEPS = 30


class CoronaParameters(BaseModel):
    """Scalars every closed form is written in."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    n1: int
    r1: int
    m1: int
    n2: int

    @property
    def b(self) -> float:
        return 1.0 - self.alpha


# Root solving


def _residual_bound(coeffs: np.ndarray, x: float) -> float:
    powers = max(1.0, abs(x)) ** np.arange(len(coeffs))
    return _RESIDUAL_TOL * float(np.sum(np.abs(coeffs) * powers))


def _newton(coeffs: np.ndarray, x: float) -> float:
    deriv = P.polyder(coeffs)
    for _ in range(_NEWTON_STEPS):
        slope = P.polyval(x, deriv)
        if slope == 0.0:
            break
        step = P.polyval(x, coeffs) / slope
        x -= step
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            break
    return float(x)


def _refine(coeffs: np.ndarray, roots: List[float]) -> List[float]:
    """Collapse near-equal roots onto one multiple root, polish simple ones."""
    scale = max([1.0] + [abs(x) for x in roots])
    clusters: List[List[float]] = []
    for x in roots:
        if clusters and x - clusters[-1][-1] <= _CLUSTER_TOL * scale:
            clusters[-1].append(x)
        else:
            clusters.append([x])

    refined: List[float] = []
    for cluster in clusters:
        k = len(cluster)
        x0 = float(np.mean(cluster))
        if k > 1:
            # A root of multiplicity k is a simple root of the (k-1)-th derivative.
            x = _newton(P.polyder(coeffs, k - 1), x0)
            if abs(P.polyval(x, coeffs)) <= _residual_bound(coeffs, x):
                refined.extend([x] * k)
            else:
                refined.extend(cluster)
            continue
        x = _newton(coeffs, x0)
        if abs(P.polyval(x, coeffs)) < abs(P.polyval(x0, coeffs)):
            refined.append(x)
        else:
            refined.append(x0)
    return sorted(refined)


def solve_real_polynomial(poly: RealPolynomial, family: str = "polynomial") -> List[float]:
    """All roots of a real polynomial of degree 1..4, which must all be real.

    Roots come from the companion matrix, then clusters are merged into
    multiple roots and simple roots get a Newton polish. A root that still
    misses the residual target is returned with a warning, not an error.

    Raises:
        ValueError: If the degree is outside [1, 4]
        FormulaCountError: If a root has a non-negligible imaginary part
    """
    if not 1 <= poly.degree <= 4:
        raise ValueError(f"degree {poly.degree} outside [1, 4]")
    coeffs = np.asarray(poly.coefficients, dtype=float)
    raw = P.polyroots(coeffs)
    for z in raw:
        if abs(z.imag) > _IMAG_TOL * max(1.0, abs(z)):
            raise FormulaCountError(
                f"complex root {z} in {family} factor with coefficients {poly.coefficients}",
                family=family,
            )
    roots = _refine(coeffs, sorted(float(z.real) for z in raw))
    for x in roots:
        if abs(P.polyval(x, coeffs)) > _residual_bound(coeffs, x):
            logger.warning(
                f"Root {x} of {family} factor misses the residual target: "
                f"|p(x)|={abs(P.polyval(x, coeffs)):.3e}"
            )
    return roots


# Factor algebra


def _kind(kind: Union[CoronaKind, str]) -> CoronaKind:
    kind = kind if isinstance(kind, CoronaKind) else CoronaKind.parse(kind)
    if not kind.has_closed_form:
        raise ValueError(f"{kind.value} corona has no closed-form factorization")
    return kind


def copy_shift(kind: CoronaKind, alpha: float, r1: int) -> float:
    """Diagonal shift alpha * (anchors per copy vertex) of every G2 copy."""
    return alpha * r1 if kind is CoronaKind.SPLITTING_NEIGHBOURHOOD else alpha


def _mu_factor(
    kind: CoronaKind, p: CoronaParameters, lam: Number, mu: float, gamma: float
) -> Number:
    a, b, r1, n2 = p.alpha, p.b, p.r1, p.n2
    s = mu + r1
    if kind is CoronaKind.TOTAL:
        t = lam - 2 * a * r1 + 2 * b
        return (t - b * s) * (lam - (2 * r1 + n2) * a - b * mu - b * b * gamma) - b * b * s
    if kind is CoronaKind.Q_VERTEX:
        t = lam - 2 * a * r1 + 2 * b
        return (t - b * s) * (lam - a * (r1 + n2) - b * b * gamma) - b * b * s
    if kind is CoronaKind.SPLITTING:
        return (lam - a * (2 * r1 + n2) - b * b * gamma - b * mu) * (lam - a * r1) - b * b * mu * mu
    if kind is CoronaKind.SPLITTING_ADD_VERTEX:
        return (lam - 2 * a * r1 - b * mu) * (lam - a * (r1 + n2) - b * b * gamma) - b * b * mu * mu
    if kind is CoronaKind.SPLITTING_NEIGHBOURHOOD:
        left = lam - a * (2 + n2) * r1 - b * mu - b * b * gamma * mu * mu
        return left * (lam - a * r1) - b * b * mu * mu
    u = lam - a * r1
    return u * _q_edge_w(p, lam, gamma) - b * (u + b) * s


def _q_edge_w(p: CoronaParameters, lam: Number, gamma: float) -> Number:
    return lam - p.alpha * (2 * p.r1 + p.n2) - p.b * p.b * gamma + 2 * p.b


def _prefix(kind: CoronaKind, p: CoronaParameters, lam: Number, gamma: float) -> Optional[Number]:
    """Base of the (m1 - n1)-th power factor, None for the splitting kinds."""
    if kind in (CoronaKind.TOTAL, CoronaKind.Q_VERTEX):
        return lam - 2 * p.alpha * p.r1 + 2 * p.b
    if kind is CoronaKind.Q_EDGE:
        return _q_edge_w(p, lam, gamma)
    return None


def _clear(factor: Callable[[float], Polynomial], d: Polynomial, n2: int) -> Polynomial:
    """Multiply a factor, affine in G = n2 / d, through by d."""
    f0 = factor(0.0)
    f1 = factor(1.0)
    return f0 * d + (f1 - f0) * n2


def _as_real(poly: Polynomial) -> RealPolynomial:
    return RealPolynomial(coefficients=tuple(float(c) for c in poly.coef))


def _exact_quotient(poly: Polynomial, divisor: Polynomial, family: str) -> Polynomial:
    quotient, remainder = divmod(poly, divisor)
    scale = max(1.0, float(np.max(np.abs(poly.coef))))
    if np.max(np.abs(remainder.coef)) > 1e-6 * scale:
        raise FormulaCountError(
            f"{family} prefix does not divide the factor at s = 0 (remainder {remainder.coef})",
            family=family,
        )
    return quotient


# Prediction


def predict_spectrum(
    kind: Union[CoronaKind, str], g1: RegularSpec, g2: RegularSpec, alpha: AlphaLike
) -> PredictionReport:
    """Closed-form A_alpha spectrum of G1 (kind) G2 for regular G1 and G2.

    Args:
        kind: One of the six kinds with a closed form
        g1: Order, degree and adjacency spectrum of G1
        g2: Order, degree and adjacency spectrum of G2
        alpha: Weight in [0, 1]

    Returns:
        Report with every eigenvalue family and the assembled spectrum

    Raises:
        GraphValidationError: Edgeless G1 for total and Q kinds
        FormulaCountError: Family sizes do not add up to the composite order
    """
    kind = _kind(kind)
    a = Alpha.coerce(alpha)
    if kind.needs_edges and g1.m == 0:
        raise GraphValidationError(f"{kind.value} corona needs G1 with at least one edge")

    settings = get_settings()
    p = CoronaParameters(alpha=a, n1=g1.n, r1=g1.r, m1=g1.m, n2=g2.n)
    b, n1, r1, m1, n2 = p.b, p.n1, p.r1, p.m1, p.n2
    c = copy_shift(kind, a, r1)
    copies = copy_count(kind, n1, m1)
    d = _LAMBDA - c - g2.r
    family = kind.value

    families: List[EigenFamily] = []
    fixed = [c + a * g2.r + b * nu for nu in g2.adjacency_eigenvalues[:-1]]
    if fixed and copies:
        families.append(
            EigenFamily(
                description=f"{c:g} + alpha*r2 + (1-alpha)*lambda_i(A(G2)), i < n2",
                source="G2 copies, eigenvectors orthogonal to the all-ones vector",
                values=fixed,
                multiplicity=copies,
            )
        )

    prefix = _prefix(kind, p, _LAMBDA, 0.0)
    prefix_cleared: Optional[Polynomial] = None
    if prefix is not None:
        if kind is CoronaKind.Q_EDGE:
            prefix_cleared = _clear(lambda g: _prefix(kind, p, _LAMBDA, g), d, n2)
        else:
            prefix_cleared = prefix
        if m1 > n1:
            values = solve_real_polynomial(_as_real(prefix_cleared), family=family)
            families.append(
                EigenFamily(
                    description="roots of the prefix factor",
                    source="(m1 - n1)-th power factor",
                    values=values,
                    multiplicity=m1 - n1,
                )
            )

    # For r1 = 1 the prefix exponent m1 - n1 is negative; it cancels against
    # the factors with s = mu + r1 = 0.
    excess = n1 - m1 if prefix_cleared is not None and m1 < n1 else 0
    groups = Spectrum.from_values(g1.adjacency_eigenvalues, tolerance=settings.group_tol).groups
    for group in groups:
        mu, k = group.value, group.multiplicity
        cleared = _clear(lambda g: _mu_factor(kind, p, _LAMBDA, mu, g), d, n2)
        divided = 0
        if excess and abs(mu + r1) <= settings.group_tol:
            divided = min(k, excess)
            excess -= divided
            quotient = _exact_quotient(cleared, prefix_cleared, family)
            families.append(
                EigenFamily(
                    description=f"factor at lambda(A(G1)) = {mu:g} after cancelling the prefix",
                    source="per-eigenvalue factor divided by the prefix",
                    values=solve_real_polynomial(_as_real(quotient), family=family),
                    multiplicity=divided,
                )
            )
        if k > divided:
            families.append(
                EigenFamily(
                    description=f"roots of the factor at lambda(A(G1)) = {mu:g}",
                    source="per-eigenvalue factor",
                    values=solve_real_polynomial(_as_real(cleared), family=family),
                    multiplicity=k - divided,
                )
            )
    if excess:
        raise FormulaCountError(
            f"{family}: {excess} prefix cancellations found no factor with s = 0",
            family=family,
        )

    order = composite_order(kind, n1, m1, n2)
    values = [x for f in families for x in f.expanded()]
    for f in families:
        logger.debug(f"{family} family '{f.description}': size {f.size}")
    if len(values) != order:
        raise FormulaCountError(
            f"{family}: families hold {len(values)} eigenvalues, composite has {order}",
            family=family,
        )

    return PredictionReport(
        kind=kind,
        alpha=a,
        order=order,
        families=families,
        total=Spectrum.from_values(values, tolerance=settings.group_tol),
    )


# Pointwise evaluation


def _absorb(sign: float, log_abs: float, factor: float, power: int = 1) -> Tuple[float, float]:
    """Multiply ``factor ** power`` into a value held as (sign, log|value|)."""
    if factor == 0.0:
        return 0.0, -math.inf
    factor_sign = 1.0 if factor > 0 else (-1.0 if power % 2 else 1.0)
    return sign * factor_sign, log_abs + power * math.log(abs(factor))


def eval_proposition_log_charpoly(
    kind: Union[CoronaKind, str], g1: Graph, g2: Graph, alpha: AlphaLike, lam: float
) -> Tuple[float, float]:
    """Sign and log|det(lam*I - A_alpha(G1 (kind) G2))| from the factorization.

    Raises:
        RegularityError: If G1 is not regular
        PoleError: If lam is at a pole of the coronal or of the prefix power
    """
    kind = _kind(kind)
    a = Alpha.coerce(alpha)
    info = degree_info(g1)
    if g1.n == 0 or not info.is_regular:
        raise RegularityError("G1 must be a non-empty regular graph")
    if kind.needs_edges and g1.m == 0:
        raise GraphValidationError(f"{kind.value} corona needs G1 with at least one edge")

    p = CoronaParameters(alpha=a, n1=g1.n, r1=info.regular_degree, m1=g1.m, n2=g2.n)
    c = copy_shift(kind, a, p.r1)
    m2 = a_alpha_matrix(g2, a)
    gamma = m_coronal(m2, lam - c)

    sign, log_abs = 1.0, 0.0
    copies = copy_count(kind, p.n1, p.m1)
    for x in lam - c - sym_eigenvalues(m2).as_array():
        sign, log_abs = _absorb(sign, log_abs, float(x), copies)

    for mu in sym_eigenvalues(a_alpha_matrix(g1, 0.0)).as_array():
        sign, log_abs = _absorb(sign, log_abs, _mu_factor(kind, p, lam, float(mu), gamma))

    exponent = p.m1 - p.n1
    base = _prefix(kind, p, lam, gamma)
    if base is not None and exponent:
        if exponent < 0 and abs(base) < get_settings().pole_tol:
            raise PoleError(f"lambda={lam} is a root of the cancelled prefix factor")
        sign, log_abs = _absorb(sign, log_abs, float(base), exponent)
    return sign, log_abs


def eval_proposition_charpoly(
    kind: Union[CoronaKind, str], g1: Graph, g2: Graph, alpha: AlphaLike, lam: float
) -> float:
    """Factorized det(lam*I - A_alpha(G1 (kind) G2)) for regular G1 and any G2.

    Overflows to +-inf past the float range; compare large composites with
    :func:`eval_proposition_log_charpoly`.
    """
    sign, log_abs = eval_proposition_log_charpoly(kind, g1, g2, alpha, lam)
    with np.errstate(over="ignore"):
        return float(sign * np.exp(log_abs))


def log_relative_deviation(predicted: Tuple[float, float], oracle: Tuple[float, float]) -> float:
    """|predicted / oracle - 1| for values given as (sign, log|value|).

    Opposite signs, zeros and non-finite logs give inf so they can never pass.
    """
    (sign_p, log_p), (sign_o, log_o) = predicted, oracle
    if not (math.isfinite(log_p) and math.isfinite(log_o)) or sign_p == 0 or sign_p != sign_o:
        return math.inf
    deviation = abs(math.expm1(min(log_p - log_o, 700.0)))
    return deviation if math.isfinite(deviation) else math.inf


# Verification cells


def verify_spectrum_cell(
    kind: Union[CoronaKind, str], g1: Graph, g2: Graph, alpha: float, tol: float
) -> VerifyCell:
    """Sorted elementwise deviation of the predicted from the oracle spectrum."""
    kind = _kind(kind)
    report = predict_spectrum(kind, regular_spec(g1), regular_spec(g2), alpha)
    composite, _ = compose(kind, g1, g2)
    oracle = sym_eigenvalues(a_alpha_matrix(composite, alpha)).as_array()
    predicted = report.total.as_array()
    if predicted.shape != oracle.shape:
        raise FormulaCountError(
            f"predicted {predicted.size} eigenvalues, oracle has {oracle.size}",
            family=kind.value,
        )
    deviation = float(np.max(np.abs(predicted - oracle))) if oracle.size else 0.0
    if not math.isfinite(deviation):
        deviation = math.inf
    return VerifyCell(
        alpha=alpha, max_deviation=deviation, samples=int(oracle.size), passed=deviation <= tol
    )


def sample_lambdas(radius: float, count: int, seed: Optional[int] = None) -> np.ndarray:
    """Deterministic lambda samples, uniform in [radius + 1, radius + 10]."""
    rng = np.random.default_rng(get_settings().sample_seed if seed is None else seed)
    return rng.uniform(radius + 1.0, radius + 10.0, size=count)


def verify_charpoly_cell(
    kind: Union[CoronaKind, str],
    g1: Graph,
    g2: Graph,
    alpha: float,
    tol: float,
    samples: int = 10,
) -> VerifyCell:
    """Largest relative deviation of the factorized charpoly from the determinant oracle.

    Both sides are compared as (sign, log|det|), so composites whose
    determinant leaves the float range are still checked.
    """
    kind = _kind(kind)
    composite, _ = compose(kind, g1, g2)
    matrix = a_alpha_matrix(composite, alpha)
    deviation = 0.0
    for lam in sample_lambdas(spectral_radius(matrix), samples):
        predicted = eval_proposition_log_charpoly(kind, g1, g2, alpha, float(lam))
        oracle = charpoly_oracle(matrix, float(lam))
        deviation = max(deviation, log_relative_deviation(predicted, oracle))
    return VerifyCell(
        alpha=alpha, max_deviation=deviation, samples=samples, passed=deviation <= tol
    )

