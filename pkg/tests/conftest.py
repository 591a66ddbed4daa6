"""
Fixtures compartilhadas: configurações pequenas sobre QQ e F_7
"""
import pytest

from shared.algebra.scalars import FieldConfig, get_field, validate_config


@pytest.fixture
def qq():
    return get_field(0)


@pytest.fixture
def f7():
    return get_field(7)


@pytest.fixture
def config_qq():
    """q = 2, Q = (3, 5), d = 2, nível 2"""
    return validate_config(FieldConfig(characteristic=0, q=2, Q=(3, 5), d=2))


@pytest.fixture
def config_f7():
    """q = 2 (ordem 3 em F_7), Q = (1, 3)"""
    return validate_config(FieldConfig(characteristic=7, q=2, Q=(1, 3), d=2))


@pytest.fixture
def level_zero(config_qq):
    return config_qq.with_level(0)


@pytest.fixture
def level_one(config_qq):
    return config_qq.with_level(1)
