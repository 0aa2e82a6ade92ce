"""Expression parsers and the ``pontcalc`` command line."""
