# coding: utf-8

# # Rationally extended radial oscillators
#
# A g-polynomial without roots on the positive half-line defines a regular
# extension of the radial oscillator.

# In[1]:

from fractions import Fraction

import numpy as np

from xlaguerre.eop import FirstOrder, SecondOrder, SeedKind, SSUSYCase, g_poly
from xlaguerre.polycore import count_roots_positive
from xlaguerre.susy import OscParams, extension_from_source, factorization_residual, si_residual

params = OscParams(omega=1, l=1)


# Candidate g-polynomials at alpha = l + 1/2, with their positive-root counts.

# In[2]:

sources = [FirstOrder(SeedKind.TYPE_I, 1), FirstOrder(SeedKind.TYPE_I, 2),
           FirstOrder(SeedKind.TYPE_II, 2), SecondOrder(SSUSYCase.I_II, 1, 1)]
for src in sources:
    g, mu = g_poly(src, params.alpha)
    print(f"{src.label:18s} mu={mu}  g = {g}  positive roots: {count_roots_positive(g)}")


# Sample the extended potential next to the conventional one.

# In[3]:

spec = extension_from_source(params, SecondOrder(SSUSYCase.I_II, 1, 1))
x = np.linspace(0.5, 4.0, 8)
print(np.round(spec.potential()(x), 6))


# The superpotential factorizes the extended Hamiltonian, and the partner
# at l + 1 has the same form. Both residuals are exact rational functions.

# In[4]:

print(factorization_residual(spec).is_identically_zero())
print(si_residual(params, spec.provenance).is_identically_zero())


# A seed outside its validity range is refused with a reason.

# In[5]:

from xlaguerre.susy import first_order_extension

try:
    first_order_extension(SeedKind.TYPE_II, OscParams(1, 0), 2)
except ValueError as exc:
    print("rejected:", exc)
