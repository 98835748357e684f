"""Physical constants used throughout the package.

Defaults are the CODATA 2018 recommended values. A flat JSON file with the
keys ``c, hbar, h, e, m_e, epsilon_0, alpha`` (SI units) can replace them;
the path may also come from the ``SEMIPHOTON_CONSTANTS`` environment
variable. Every record is validated on construction, whatever its origin.

Unit conventions: the field modules (:mod:`semiphoton_lab.fields`,
:mod:`semiphoton_lab.ring`) work in a Gaussian-style convention with ``c``
explicit and E, H in the same unit. :mod:`semiphoton_lab.electron_model`
uses SI for everything touching these constants.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass
from pathlib import Path

ENV_VAR = "SEMIPHOTON_CONSTANTS"

FIELD_NAMES = ("c", "hbar", "h", "e", "m_e", "epsilon_0", "alpha")

UNITS = {
    "c": "m/s",
    "hbar": "J s",
    "h": "J s",
    "e": "C",
    "m_e": "kg",
    "epsilon_0": "F/m",
    "alpha": "1",
}

H_REL_TOL = 1e-9
ALPHA_REL_TOL = 1e-6

# CODATA 2018
_CODATA_2018 = {
    "c": 299792458.0,
    "hbar": 1.0545718176461565e-34,
    "h": 6.62607015e-34,
    "e": 1.602176634e-19,
    "m_e": 9.1093837015e-31,
    "epsilon_0": 8.8541878128e-12,
    "alpha": 7.2973525693e-3,
}


class ConstantsError(ValueError):
    """Raised when a constants record is missing a field or fails validation."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


@dataclass(frozen=True)
class PhysicalConstants:
    c: float
    hbar: float
    h: float
    e: float
    m_e: float
    epsilon_0: float
    alpha: float

    def __post_init__(self):
        for name in FIELD_NAMES:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConstantsError(name, f"expected a number, got {value!r}")
            if not math.isfinite(value) or value <= 0:
                raise ConstantsError(name, f"must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, float(value))

        h_expected = 2.0 * math.pi * self.hbar
        if abs(self.h - h_expected) > H_REL_TOL * h_expected:
            raise ConstantsError(
                "h", f"h = {self.h!r} differs from 2*pi*hbar = {h_expected!r}"
            )
        alpha_expected = self.e**2 / (4.0 * math.pi * self.epsilon_0 * self.hbar * self.c)
        if abs(self.alpha - alpha_expected) > ALPHA_REL_TOL * alpha_expected:
            raise ConstantsError(
                "alpha",
                f"alpha = {self.alpha!r} inconsistent with "
                f"e^2/(4 pi eps0 hbar c) = {alpha_expected!r}",
            )

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_mapping(cls, data) -> "PhysicalConstants":
        if not isinstance(data, dict):
            raise ConstantsError("<root>", "constants file must hold a JSON object")
        for name in FIELD_NAMES:
            if name not in data:
                raise ConstantsError(name, "missing field")
        unknown = sorted(set(data) - set(FIELD_NAMES))
        if unknown:
            raise ConstantsError(unknown[0], "unknown field")
        return cls(**{name: data[name] for name in FIELD_NAMES})


def codata_2018() -> PhysicalConstants:
    return PhysicalConstants(**_CODATA_2018)


def natural_units(alpha: float = _CODATA_2018["alpha"], m_e: float = 1.0) -> PhysicalConstants:
    """Record with hbar = c = epsilon_0 = 1 and e fixed by ``alpha``.

    Handy for desk-scale tests where energies and wave numbers are O(1).
    """
    return PhysicalConstants(
        c=1.0,
        hbar=1.0,
        h=2.0 * math.pi,
        e=math.sqrt(4.0 * math.pi * alpha),
        m_e=m_e,
        epsilon_0=1.0,
        alpha=alpha,
    )


def resolve_path(path: str | os.PathLike | None) -> Path | None:
    """Explicit path wins over ``$SEMIPHOTON_CONSTANTS``; None means defaults."""
    if path is not None:
        return Path(path)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def load_constants(source: str | os.PathLike | None = None, *, use_env: bool = False) -> PhysicalConstants:
    """Load and validate a constants record.

    Parameters
    ----------
    source
        Path to a JSON constants file. ``None`` returns the CODATA 2018
        defaults unless ``use_env`` is set and the environment names a file.
    use_env
        Consult ``$SEMIPHOTON_CONSTANTS`` when ``source`` is None.
    """
    path = resolve_path(source) if (source is not None or use_env) else None
    if path is None:
        return codata_2018()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConstantsError("<file>", f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConstantsError("<file>", f"invalid JSON in {path}: {exc.msg}") from exc
    return PhysicalConstants.from_mapping(data)


def save_constants(constants: PhysicalConstants, path: str | os.PathLike) -> None:
    Path(path).write_text(constants.to_json() + "\n", encoding="utf-8")


__all__ = [
    "ConstantsError",
    "ENV_VAR",
    "FIELD_NAMES",
    "PhysicalConstants",
    "UNITS",
    "codata_2018",
    "load_constants",
    "natural_units",
    "resolve_path",
    "save_constants",
]
