"""hyperalpha - A_alpha spectral radius and degree lower bounds for uniform hypergraphs."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("hyperalpha")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.1.0"
