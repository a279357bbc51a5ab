"""Spectra and generalized eigenfunctions of SU(1,1) squeezing generators."""

__version__ = "0.1.0"
