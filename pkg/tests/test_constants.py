import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiphoton_lab.constants import (
    ENV_VAR,
    ConstantsError,
    PhysicalConstants,
    codata_2018,
    load_constants,
    natural_units,
    save_constants,
)


def write(tmp_path, data, name="k.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_default_speed_of_light_is_exact():
    assert load_constants().c == 299792458


def test_default_alpha_matches_its_definition(codata):
    # e^2 / (4 pi eps0 hbar c) from the CODATA 2018 inputs
    derived = codata.e**2 / (4 * math.pi * codata.epsilon_0 * codata.hbar * codata.c)
    assert derived == pytest.approx(7.2973525693e-3, rel=1e-9)
    assert codata.alpha == pytest.approx(derived, rel=1e-6)


def test_default_h_is_two_pi_hbar(codata):
    assert codata.h == pytest.approx(2 * math.pi * codata.hbar, rel=1e-15)


def test_inconsistent_alpha_rejected(tmp_path, codata):
    data = codata.to_dict()
    data["alpha"] *= 1 + 5e-6
    with pytest.raises(ConstantsError) as exc:
        load_constants(write(tmp_path, data))
    assert exc.value.field == "alpha"


def test_h_hbar_mismatch_rejected(codata):
    data = codata.to_dict()
    data["h"] *= 1 + 1e-6
    with pytest.raises(ConstantsError, match="^h:"):
        PhysicalConstants(**data)


@pytest.mark.parametrize("field", ["c", "hbar", "h", "e", "m_e", "epsilon_0", "alpha"])
def test_missing_field_named(tmp_path, codata, field):
    data = codata.to_dict()
    del data[field]
    with pytest.raises(ConstantsError) as exc:
        load_constants(write(tmp_path, data))
    assert exc.value.field == field
    assert field in str(exc.value)


@pytest.mark.parametrize("value", [0.0, -1.0, float("nan"), "fast"])
def test_bad_value_named(tmp_path, codata, value):
    data = codata.to_dict()
    data["m_e"] = value
    path = tmp_path / "k.json"
    path.write_text(json.dumps(data, allow_nan=True))
    with pytest.raises(ConstantsError) as exc:
        load_constants(path)
    assert exc.value.field == "m_e"


def test_unknown_field_rejected(tmp_path, codata):
    data = codata.to_dict() | {"G": 6.674e-11}
    with pytest.raises(ConstantsError, match="unknown"):
        load_constants(write(tmp_path, data))


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    with pytest.raises(ConstantsError, match="invalid JSON"):
        load_constants(path)


def test_missing_file(tmp_path):
    with pytest.raises(ConstantsError, match="cannot read"):
        load_constants(tmp_path / "nope.json")


def test_round_trip_is_exact(tmp_path, codata):
    path = tmp_path / "k.json"
    save_constants(codata, path)
    assert load_constants(path) == codata


def test_env_var_used_only_when_asked(tmp_path, monkeypatch, codata):
    data = natural_units().to_dict()
    path = write(tmp_path, data)
    monkeypatch.setenv(ENV_VAR, str(path))
    assert load_constants() == codata
    assert load_constants(use_env=True).c == 1.0


def test_explicit_path_beats_env(tmp_path, monkeypatch, codata):
    monkeypatch.setenv(ENV_VAR, str(write(tmp_path, natural_units().to_dict(), "nat.json")))
    explicit = write(tmp_path, codata.to_dict(), "si.json")
    assert load_constants(explicit, use_env=True) == codata


def test_natural_units_valid():
    k = natural_units()
    assert (k.c, k.hbar, k.epsilon_0) == (1.0, 1.0, 1.0)


def test_frozen(codata):
    with pytest.raises(AttributeError):
        codata.c = 3e8


positive = st.floats(min_value=1e-40, max_value=1e40, allow_nan=False, allow_infinity=False)


@settings(max_examples=60)
@given(hbar=positive, c=positive, eps0=positive, alpha=st.floats(1e-6, 0.5))
def test_round_trip_any_valid_record(tmp_path_factory, hbar, c, eps0, alpha):
    e = math.sqrt(alpha * 4 * math.pi * eps0 * hbar * c)
    if not (e > 0 and math.isfinite(e)):
        return
    k = PhysicalConstants(c=c, hbar=hbar, h=2 * math.pi * hbar, e=e, m_e=1.0, epsilon_0=eps0, alpha=alpha)
    path = tmp_path_factory.mktemp("rt") / "k.json"
    save_constants(k, path)
    assert load_constants(path) == k
