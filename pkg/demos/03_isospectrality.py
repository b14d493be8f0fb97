# coding: utf-8

# # Numerical spectra of extended potentials
#
# Finite differences on nested grids, with Richardson extrapolation, compared
# with the oscillator ladder omega (2 nu + l + 3/2).

# In[1]:

import numpy as np

from xlaguerre.eop import FirstOrder, SeedKind
from xlaguerre.numerics import GridSpec, bound_states, default_grid, ground_state_overlap, Wavefunction
from xlaguerre.susy import OscParams, extension_from_source, oscillator_energy

params = OscParams(1, 2)
spec = extension_from_source(params, FirstOrder(SeedKind.TYPE_I, 2))
exact = lambda nu: float(oscillator_energy(params, nu))


# In[2]:

report = bound_states(spec.potential(), k=5, analytic=exact)
for lv in report.levels:
    print(f"nu={lv.index}  numeric={lv.numeric:.9f}  exact={lv.analytic}  error={lv.abs_error:.1e}")


# Without extrapolation the error falls by a factor of four per halving of h.

# In[3]:

base = default_grid(spec.potential(), 1.0, exact(4))
errs = []
for pts in (201, 401, 801):
    raw = bound_states(spec.potential(), GridSpec(base.x_min, base.x_max, pts, 1), k=5)
    errs.append(np.abs(raw.numeric() - [exact(j) for j in range(5)]))
print(np.round(errs[0] / errs[1], 3))
print(np.round(errs[1] / errs[2], 3))


# The numeric ground eigenvector matches the analytic ground state.

# In[4]:

print(ground_state_overlap(spec.potential(), Wavefunction(spec, 0), base))
