from sinclp.models import GridSpec, QuadratureConfig


# Model initialization factories.
def mk_default_config():
    """
    Create a quadrature configuration with default values.

    Returns
    -------
    QuadratureConfig
        Tolerances 1e-12, 2000 subdivisions, the 15-point Gauss-Kronrod
        pair and the averaged tail policy.
    """
    return QuadratureConfig()


def mk_default_grid():
    """
    Create the default verification grid.

    Returns
    -------
    list[float]
        {1, 1.1, ..., 10} followed by {15, 20, ..., 100}, ascending
    """
    fine = GridSpec(1.0, 10.0, 0.1).points()
    coarse = GridSpec(15.0, 100.0, 5.0).points()
    return fine + coarse


def mk_grid(text: str):
    """
    Create a grid from the `start:stop:step` command line syntax.

    Parameters
    ----------
    text : str
        Grid literal

    Returns
    -------
    list[float]
        The grid points, ascending
    """
    return GridSpec.parse(text).points()
