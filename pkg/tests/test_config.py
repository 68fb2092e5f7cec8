import pytest

from hodgerep.config import Caps, env_overrides, load_caps, parse_config_text
from hodgerep.errors import UsageError


def test_defaults():
    caps = Caps()
    assert caps.weight_system_dim == 10**6
    assert (caps.oracle_dim, caps.oracle_rank) == (2000, 6)


def test_parse_text():
    text = "# caps\nmax-rank = 5\n\nORACLE_DIM=100  # small\n"
    assert parse_config_text(text) == {"max_rank": "5", "oracle_dim": "100"}
    with pytest.raises(UsageError):
        parse_config_text("max_rank 5")


def test_bad_values():
    for values in ({"nope": 1}, {"max_rank": "x"}, {"max_rank": 0}):
        with pytest.raises(UsageError):
            Caps().updated(values)


def test_precedence(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("max_rank=5\nmax_factors=2\n")
    env = {"HODGEREP_MAX_RANK": "4", "OTHER": "1"}
    assert env_overrides(env) == {"max_rank": "4"}
    caps = load_caps(path, env)
    assert (caps.max_rank, caps.max_factors) == (4, 2)
    assert load_caps(None, {}) == Caps()


def test_missing_file(tmp_path):
    with pytest.raises(UsageError):
        load_caps(tmp_path / "absent.cfg", {})
