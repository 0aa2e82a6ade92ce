"""Exact calculator for Pontryagin classes, Segre-type ideals and the
cohomology rings of quaternionic-style Grassmannians and BGL_n."""

from pontcalc.bundles import FormalBundle, f_poly, pontryagin, top_class, total_class
from pontcalc.core import GradedPolynomial, VarSet
from pontcalc.errors import ParityError, ParseError, PontcalcError, RangeError
from pontcalc.ideals import J, L, Ideal, ideal_contains_ideal
from pontcalc.rings import bgl_pair_ring, bgl_ring, gr2_ring, gr_ring
from pontcalc.segre import segre

__version__ = "0.1.0"
