import pytest

from sinclp.errors import ArgumentError
from sinclp.models import GridSpec, QuadratureConfig, TailPolicy
from sinclp.models.factories import mk_default_grid, mk_grid


class TestGridSpec:
    def test_points_include_stop(self):
        assert GridSpec(1.0, 2.0, 0.5).points() == [1.0, 1.5, 2.0]

    def test_points_are_rounded(self):
        points = GridSpec.parse("1:2:0.1").points()
        assert len(points) == 11
        assert points[1] == 1.1
        assert points[-1] == 2.0

    def test_verification_grid_size(self):
        assert len(mk_grid("1:100:0.5")) == 199

    def test_default_grid(self):
        grid = mk_default_grid()
        assert grid[0] == 1.0
        assert grid[-1] == 100.0
        assert grid == sorted(set(grid))

    @pytest.mark.parametrize(
        "text", ["x", "1:2", "0.5:2:1", "5:1:1", "1:2:0", "1:inf:1", "a:b:c"]
    )
    def test_invalid(self, text):
        with pytest.raises(ArgumentError):
            GridSpec.parse(text)


class TestQuadratureConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.abs_tol == cfg.rel_tol == 1e-12
        assert cfg.panel_order == 15
        assert cfg.tail_policy is TailPolicy.AVERAGED

    def test_policy_from_string(self):
        assert QuadratureConfig(tail_policy="majorant").tail_policy is (
            TailPolicy.MAJORANT
        )

    def test_with_tolerance(self):
        cfg = QuadratureConfig().with_tolerance(1e-6)
        assert (cfg.abs_tol, cfg.rel_tol) == (1e-6, 1e-6)

    @pytest.mark.parametrize(
        "kwargs",
        [{"abs_tol": 0.0}, {"rel_tol": -1.0}, {"max_subdivisions": 0}],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ArgumentError):
            QuadratureConfig(**kwargs)

    def test_unknown_policy(self):
        with pytest.raises(ValueError):
            QuadratureConfig(tail_policy="exact")
