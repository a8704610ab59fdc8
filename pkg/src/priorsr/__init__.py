"""Recurrent 8x face super-resolution with progressive landmark and AU priors."""

__version__ = "0.1.0"
