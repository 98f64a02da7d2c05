"""detlab: an exact workbench for determinantal rings and their Cohen-Macaulay modules.

Everything is computed over exact coefficients (rationals or a prime field).
The package splits into combinatorics (partitions, schurcalc), a
characteristic-zero cohomology oracle for Grassmannian bundles (bott), a
Groebner/resolution engine (commalg), and the determinantal constructions
built on top (detvar).
"""

__version__ = "0.1.0"
