import pytest

from sinclp.models import QuadratureConfig, TailPolicy
from sinclp.models.factories import mk_default_config


@pytest.fixture
def cfg():
    """Default quadrature settings."""
    return mk_default_config()


@pytest.fixture
def majorant_cfg():
    """Settings with the plain majorant tail at a desk-scale tolerance."""
    return QuadratureConfig(
        abs_tol=1e-8, rel_tol=1e-8, tail_policy=TailPolicy.MAJORANT
    )
