"""Exact verification toolkit for depth-two ring extensions and the
coring / bialgebroid / Hopf-algebroid structures they carry."""

__version__ = "0.1.0"
