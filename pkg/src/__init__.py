"""Corona-type graph products and their A_alpha spectra."""

__version__ = "0.1.0"
