"""Dirac matrices and momentum-space Dirac operators.

The basis is the Dirac-Pauli representation with ``alpha0 = I``::

    beta    = diag(I2, -I2)
    alpha_i = [[0, s_i], [s_i, 0]]
    alpha5  = alpha0 alpha1 alpha2 alpha3 = i [[0, I2], [I2, 0]]
    sigma_i = i alpha5 beta alpha_i = diag(s_i, -s_i)

All entries are 0, +-1 or +-i, so the algebraic identities hold exactly in
floating point. ``sigma_i`` is defined by the product above rather than as
diag(s_i, s_i); note that ``alpha5 @ alpha5 = -I`` in this convention.

Operators are built from plane-wave data: energy ``hbar*omega`` and momentum
``hbar*k`` are formed internally. Each operator is kept as a list of
``(basis element, coefficient)`` terms until it is assembled, which lets the
mass/potential substitutions be applied term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from semiphoton_lab.constants import PhysicalConstants, codata_2018

Branch = Literal["electron", "positron"]

MATRIX_ATOL = 1e-14

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)


def _frozen(m):
    m = np.array(m, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class DiracBasis:
    alpha0: np.ndarray
    alpha1: np.ndarray
    alpha2: np.ndarray
    alpha3: np.ndarray
    beta: np.ndarray
    alpha5: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray
    sigma3: np.ndarray

    @property
    def alphas(self):
        return (self.alpha1, self.alpha2, self.alpha3)

    @property
    def sigmas(self):
        return (self.sigma1, self.sigma2, self.sigma3)

    def __getitem__(self, name: str) -> np.ndarray:
        return getattr(self, name)


def build_basis() -> DiracBasis:
    alphas = [np.block([[_Z2, s], [s, _Z2]]) for s in _PAULI]
    alpha0 = np.eye(4, dtype=complex)
    beta = np.block([[_I2, _Z2], [_Z2, -_I2]])
    alpha5 = alpha0 @ alphas[0] @ alphas[1] @ alphas[2]
    sigmas = [1j * alpha5 @ beta @ a for a in alphas]
    return DiracBasis(
        alpha0=_frozen(alpha0),
        alpha1=_frozen(alphas[0]),
        alpha2=_frozen(alphas[1]),
        alpha3=_frozen(alphas[2]),
        beta=_frozen(beta),
        alpha5=_frozen(alpha5),
        sigma1=_frozen(sigmas[0]),
        sigma2=_frozen(sigmas[1]),
        sigma3=_frozen(sigmas[2]),
    )


BASIS = build_basis()


def basis_residuals(basis: DiracBasis = BASIS) -> dict[str, float]:
    """Max-entry residual of every defining identity of the basis."""
    eye = np.eye(4)
    out = {}
    a = basis.alphas
    worst = 0.0
    for i in range(3):
        for j in range(3):
            anti = a[i] @ a[j] + a[j] @ a[i]
            worst = max(worst, np.abs(anti - 2.0 * (i == j) * eye).max())
    out["alpha_i alpha_j + alpha_j alpha_i = 2 delta_ij I"] = worst
    out["beta^2 = I"] = np.abs(basis.beta @ basis.beta - eye).max()
    out["alpha_i beta + beta alpha_i = 0"] = max(
        np.abs(ai @ basis.beta + basis.beta @ ai).max() for ai in a
    )
    out["alpha5 = alpha0 alpha1 alpha2 alpha3"] = np.abs(
        basis.alpha5 - basis.alpha0 @ a[0] @ a[1] @ a[2]
    ).max()
    out["i alpha5 beta alpha_i = sigma_i"] = max(
        np.abs(1j * basis.alpha5 @ basis.beta @ ai - si).max()
        for ai, si in zip(a, basis.sigmas)
    )
    return {k: float(v) for k, v in out.items()}


@dataclass(frozen=True)
class PlaneWaveParams:
    """Plane wave ``psi = amplitude * exp(i(omega t - k.r))``.

    omega in rad/s, wavevector in rad/m, mass in kg.
    """

    omega: float
    wavevector: tuple[float, float, float]
    mass: float
    amplitude: tuple[complex, ...] = (1.0, 1.0, 1.0, 1.0)

    def __post_init__(self):
        k = tuple(float(v) for v in self.wavevector)
        if len(k) != 3:
            raise ValueError("wavevector must have 3 components")
        object.__setattr__(self, "wavevector", k)
        amp = tuple(complex(v) for v in self.amplitude)
        if len(amp) != 4:
            raise ValueError("amplitude must have 4 components")
        object.__setattr__(self, "amplitude", amp)
        if not np.isfinite(self.omega) or self.omega < 0:
            raise ValueError(f"omega must be >= 0, got {self.omega!r}")
        if not np.isfinite(self.mass) or self.mass < 0:
            raise ValueError(f"mass must be >= 0, got {self.mass!r}")
        if not all(np.isfinite(k)):
            raise ValueError("wavevector must be finite")

    def energy(self, constants: PhysicalConstants) -> float:
        return constants.hbar * self.omega

    def momentum(self, constants: PhysicalConstants) -> np.ndarray:
        return constants.hbar * np.asarray(self.wavevector)

    def rest_energy(self, constants: PhysicalConstants) -> float:
        return self.mass * constants.c**2


@dataclass(frozen=True)
class ExternalPotentials:
    """Scalar and vector potential with the coupling charge."""

    phi: float
    A: tuple[float, float, float]
    charge: float

    def __post_init__(self):
        A = tuple(float(v) for v in self.A)
        if len(A) != 3:
            raise ValueError("A must have 3 components")
        object.__setattr__(self, "A", A)
        if not (np.isfinite(self.phi) and np.isfinite(self.charge) and all(np.isfinite(A))):
            raise ValueError("potentials must be finite")


# -- term lists ----------------------------------------------------------------


_ALPHA_NAMES = ("alpha1", "alpha2", "alpha3")
_SIGMA_NAMES = ("sigma1", "sigma2", "sigma3")


def _branch_sign(branch: str) -> int:
    if branch == "electron":
        return 1
    if branch == "positron":
        return -1
    raise ValueError(f"branch must be 'electron' or 'positron', got {branch!r}")


def assemble(terms, basis: DiracBasis = BASIS) -> np.ndarray:
    """Sum ``coefficient * matrix`` over a term list.

    A name may be a product of basis elements written with ``*``, e.g.
    ``"alpha5*beta"``.
    """
    out = np.zeros((4, 4), dtype=complex)
    for name, coeff in terms:
        m = np.eye(4, dtype=complex)
        for factor in name.split("*"):
            m = m @ basis[factor]
        out += coeff * m
    return out


def _kinetic_terms(params, constants, sign=1):
    eps = params.energy(constants)
    p = params.momentum(constants)
    terms = [("alpha0", eps)]
    terms += [(n, sign * constants.c * pi) for n, pi in zip(_ALPHA_NAMES, p)]
    return terms


def free_operator_terms(params, branch="electron", constants=None):
    constants = constants or codata_2018()
    s = _branch_sign(branch)
    return _kinetic_terms(params, constants, s) + [("beta", s * params.rest_energy(constants))]


def assemble_free_operator(
    params: PlaneWaveParams, branch: Branch = "electron", constants: PhysicalConstants | None = None
) -> np.ndarray:
    """``alpha0 (hbar w) +- c alpha.(hbar k) +- beta m c^2`` (upper sign: electron)."""
    return assemble(free_operator_terms(params, branch, constants))


def external_operator_terms(params, pot, constants=None):
    constants = constants or codata_2018()
    c = constants.c
    e = pot.charge
    eps = params.energy(constants)
    p = params.momentum(constants)
    terms = [("alpha0", eps - e * pot.phi)]
    terms += [(n, c * (pi - (e / c) * Ai)) for n, pi, Ai in zip(_ALPHA_NAMES, p, pot.A)]
    terms.append(("beta", params.rest_energy(constants)))
    return terms


def assemble_external_operator(
    params: PlaneWaveParams, pot: ExternalPotentials, constants: PhysicalConstants | None = None
) -> np.ndarray:
    """``alpha0 (hbar w - e phi) + c alpha.(hbar k - (e/c) A) + beta m c^2``."""
    return assemble(external_operator_terms(params, pot, constants))


def double_mass_operator_terms(params, constants=None):
    constants = constants or codata_2018()
    mc2 = params.rest_energy(constants)
    # two separate beta terms: the split that the potential substitution acts on
    return _kinetic_terms(params, constants) + [("beta", mc2), ("beta", mc2)]


def assemble_double_mass_operator(
    params: PlaneWaveParams, constants: PhysicalConstants | None = None
) -> np.ndarray:
    """``alpha0 (hbar w) + c alpha.(hbar k) + 2 beta m c^2`` with ``params.mass`` as m_e."""
    return assemble(double_mass_operator_terms(params, constants))


# -- normalisation and determinants --------------------------------------------


def energy_scale(params, constants, *extra) -> float:
    """Largest energy appearing in an operator; 1.0 if everything vanishes."""
    c = constants.c
    scales = [
        abs(params.energy(constants)),
        c * float(np.linalg.norm(params.momentum(constants))),
        params.rest_energy(constants),
        *(abs(x) for x in extra),
    ]
    s = max(scales)
    return s if s > 0 else 1.0


def normalized_determinant(operator: np.ndarray, scale: float) -> complex:
    return complex(np.linalg.det(operator / scale))


def dispersion_omega(wavevector, mass, constants: PhysicalConstants) -> float:
    """Positive root of ``(hbar w)^2 = (c hbar |k|)^2 + (m c^2)^2``."""
    k = float(np.linalg.norm(wavevector))
    return float(np.hypot(constants.c * k, mass * constants.c**2 / constants.hbar))


def determinant_roots_in_omega(wavevector, mass, constants=None, branch="electron"):
    """Roots in omega of ``det(free operator)``.

    The determinant is a quartic in omega; it is sampled at five Chebyshev
    nodes, interpolated exactly and its roots are returned (complex array,
    sorted by real part). For real k and m they are the two dispersion roots
    ``+-w0``, each double.
    """
    constants = constants or codata_2018()
    w0 = dispersion_omega(wavevector, mass, constants)
    scale = w0 if w0 > 0 else 1.0
    nodes = 2.0 * scale * np.cos(np.pi * (np.arange(5) + 0.5) / 5)
    dets = []
    for w in nodes:
        # negative omega is outside PlaneWaveParams' domain: build the terms directly
        p = constants.hbar * np.asarray(wavevector, dtype=float)
        s = _branch_sign(branch)
        terms = [("alpha0", constants.hbar * w)]
        terms += [(n, s * constants.c * pi) for n, pi in zip(_ALPHA_NAMES, p)]
        terms.append(("beta", s * mass * constants.c**2))
        dets.append(np.linalg.det(assemble(terms) / (constants.hbar * scale)).real)
    coeffs = np.polyfit(nodes / scale, dets, 4)
    roots = np.roots(coeffs) * scale
    return roots[np.argsort(roots.real)]


# -- structural substitutions ---------------------------------------------------


def external_field_equivalence(
    params: PlaneWaveParams, pot: ExternalPotentials, constants: PhysicalConstants | None = None
) -> np.ndarray:
    """Replace one ``beta m c^2`` of the double-mass operator by the potential terms.

    The mass term is swapped for ``-(e phi alpha0 + e alpha.A)`` and the
    result is compared with the directly assembled external-field operator.
    Returns the difference normalised by the largest energy involved; it is
    the zero matrix up to rounding.
    """
    constants = constants or codata_2018()
    terms = double_mass_operator_terms(params, constants)
    assert terms[-1][0] == "beta"
    e = pot.charge
    substituted = terms[:-1] + [("alpha0", -e * pot.phi)]
    substituted += [(n, -e * Ai) for n, Ai in zip(_ALPHA_NAMES, pot.A)]
    direct = assemble_external_operator(params, pot, constants)
    scale = energy_scale(
        params, constants, e * pot.phi, e * float(np.linalg.norm(pot.A))
    )
    return (assemble(substituted) - direct) / scale


def increment_to_mass_check(
    params: PlaneWaveParams,
    increment,
    branch: Branch = "electron",
    rest_energy: float | None = None,
    constants: PhysicalConstants | None = None,
    literal_signs: bool = False,
) -> np.ndarray:
    """Substitute the spinor increment by a mass term and compare with the free operator.

    The incremented massless operator is
    ``(alpha0 E + c alpha.P) + (alpha0 eps + c alpha.p)`` for the electron
    branch and ``(alpha0 E - c alpha.P) - (alpha0 eps - c alpha.p)`` for the
    positron branch, with ``increment = (eps, px, py, pz)`` (J, kg m/s). The
    increment terms are removed and replaced by ``+-beta m c^2`` with ``m c^2``
    given by ``rest_energy`` (default ``params.mass c^2``); the free operator
    of the same branch is subtracted.

    The replacement sign is the one that reproduces the free operator of each
    branch. ``literal_signs=True`` instead takes ``alpha0 eps +- c alpha.p =
    -+ beta m c^2`` at face value, which leaves ``-2 beta m c^2`` on the
    electron branch.

    Returns the difference normalised by the largest energy involved.
    """
    constants = constants or codata_2018()
    s = _branch_sign(branch)
    eps, *p_inc = (float(v) for v in increment)
    if len(p_inc) != 3:
        raise ValueError("increment must be (eps, px, py, pz)")
    mc2 = params.rest_energy(constants) if rest_energy is None else float(rest_energy)
    c = constants.c

    # the increment terms (see incremented_operator) are dropped wholesale
    mass_sign = -1 if (literal_signs and s == 1) else s
    substituted = _kinetic_terms(params, constants, s) + [("beta", mass_sign * mc2)]

    free_params = PlaneWaveParams(params.omega, params.wavevector, mc2 / c**2, params.amplitude)
    free = assemble_free_operator(free_params, branch, constants)
    scale = energy_scale(params, constants, mc2, eps, c * float(np.linalg.norm(p_inc)))
    return (assemble(substituted) - free) / scale


def incremented_operator(params, increment, branch="electron", constants=None) -> np.ndarray:
    """The operator before substitution, with the increment as explicit terms."""
    constants = constants or codata_2018()
    s = _branch_sign(branch)
    eps, *p_inc = (float(v) for v in increment)
    terms = _kinetic_terms(params, constants, s)
    terms += [("alpha0", s * eps)] + [(n, constants.c * pi) for n, pi in zip(_ALPHA_NAMES, p_inc)]
    return assemble(terms)


# -- helicity form --------------------------------------------------------------

HelicityForm = Literal["product", "reduced", "verbatim"]


def helicity_form_operator(
    params: PlaneWaveParams,
    branch: Branch = "electron",
    constants: PhysicalConstants | None = None,
    form: HelicityForm = "product",
) -> np.ndarray:
    """Free operator left-multiplied by ``i alpha5 beta``.

    ``form`` selects how it is built:

    product
        the matrix product ``i alpha5 beta @ free``.
    reduced
        term by term with ``i alpha5 beta alpha_i = sigma_i``:
        ``i alpha5 beta (hbar w) +- c sigma.(hbar k) +- i m c^2 alpha5``.
        Equal to ``product`` up to rounding.
    verbatim
        ``i beta (hbar w) -+ c sigma.(hbar k) +- i m c^2 alpha5`` as printed
        in the source derivation. It is not equal to the product unless
        ``w = 0`` and ``k = 0``; kept so the difference can be measured.
    """
    constants = constants or codata_2018()
    s = _branch_sign(branch)
    if form == "product":
        return 1j * BASIS.alpha5 @ BASIS.beta @ assemble_free_operator(params, branch, constants)
    eps = params.energy(constants)
    cp = constants.c * params.momentum(constants)
    mc2 = params.rest_energy(constants)
    if form == "reduced":
        terms = [("alpha5*beta", 1j * eps)]
        terms += [(n, s * v) for n, v in zip(_SIGMA_NAMES, cp)]
    elif form == "verbatim":
        terms = [("beta", 1j * eps)]
        terms += [(n, -s * v) for n, v in zip(_SIGMA_NAMES, cp)]
    else:
        raise ValueError(f"unknown form {form!r}")
    terms.append(("alpha5", s * 1j * mc2))
    return assemble(terms)


def helicity_of_state(amplitude, khat, basis: DiracBasis = BASIS) -> float:
    """Normalised expectation ``<psi| sigma.khat |psi> / <psi|psi>``."""
    psi = np.asarray(amplitude, dtype=complex).reshape(4)
    khat = np.asarray(khat, dtype=float).reshape(3)
    if abs(np.linalg.norm(khat) - 1.0) > 1e-12:
        raise ValueError("khat must be a unit vector")
    norm2 = float(np.vdot(psi, psi).real)
    if not norm2 > 0:
        raise ValueError("amplitude has zero norm")
    op = sum(ki * si for ki, si in zip(khat, basis.sigmas))
    return float(np.vdot(psi, op @ psi).real / norm2)


def matrices_close(a, b, atol: float = MATRIX_ATOL) -> bool:
    return bool(np.abs(np.asarray(a) - np.asarray(b)).max() <= atol)


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


__all__ = [
    "BASIS",
    "Branch",
    "DiracBasis",
    "ExternalPotentials",
    "MATRIX_ATOL",
    "PlaneWaveParams",
    "anticommutator",
    "assemble",
    "assemble_double_mass_operator",
    "assemble_external_operator",
    "assemble_free_operator",
    "basis_residuals",
    "build_basis",
    "commutator",
    "determinant_roots_in_omega",
    "dispersion_omega",
    "energy_scale",
    "external_field_equivalence",
    "free_operator_terms",
    "helicity_form_operator",
    "helicity_of_state",
    "increment_to_mass_check",
    "incremented_operator",
    "matrices_close",
    "normalized_determinant",
]
