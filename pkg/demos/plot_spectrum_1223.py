"""
Spectrum of a non-reflexive simplex
===================================

The simplex with vertices e1, e2, e3 and (-2,-2,-3) has weight (1,2,2,3).
Its spectrum has fractional exponents, so it is not an Ehrhart delta-vector,
but it still splits into unimodal slices.
"""

from latticespec.polytope import LatticePolytope
from latticespec.spectrum import alpha_slices, is_unimodal, lower_half_nondecreasing, spectrum_direct
from latticespec.weights import sector_data, weight_of_simplex

P = LatticePolytope.from_vertices([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, -2, -3)])
print("facets:", len(P.facets), " normalized volume:", P.normalized_volume())

# sum z^nu(v) over 3P, times (1-z)^3
spec = spectrum_direct(P)
print("spectrum:", spec)

w = weight_of_simplex(P)
print("weight:", w)
for i, f, d, a in sector_data(w).rows():
    print(f"  sector {i}: f={f} d={d} age={a}")

# coefficients do not rise up to the middle: 1, 2, 1, 1 at exponents 0, 1, 4/3, 5/3
print("lower half nondecreasing:", lower_half_nondecreasing(spec, 3))

for alpha, coeffs in alpha_slices(spec).items():
    print(f"slice alpha={alpha}: {coeffs} unimodal={is_unimodal(coeffs)}")
