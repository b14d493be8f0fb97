# coding: utf-8

# # X1 exceptional Laguerre polynomials
#
# Everything here is exact: coefficients are `Fraction`s, so identities are
# checked by comparing polynomials, not by sampling.

# In[1]:

from fractions import Fraction

from xlaguerre.orthopoly import laguerre, x1_laguerre, x1_norm, x1_ode_residual
from xlaguerre.polycore import Poly

alpha = Fraction(3, 2)


# The first two members of the family. Note there is no degree-0 member.

# In[2]:

for n in (1, 2, 3):
    print(n, x1_laguerre(n, alpha))


# Each member satisfies a second-order equation with rational coefficients.
# The residual below is a polynomial, and it is exactly zero.

# In[3]:

print([x1_ode_residual(n, alpha).is_zero() for n in range(1, 11)])


# The family is built from three neighbouring classical polynomials.

# In[4]:

n = 4
combo = n * laguerre(n, alpha) - 2 * (n + alpha) * laguerre(n - 1, alpha) + (n + alpha) * laguerre(n - 2, alpha)
print(combo == x1_laguerre(n, alpha))


# Norms against the weight z^alpha e^-z / (z + alpha)^2.

# In[5]:

for n in range(1, 5):
    print(n, round(x1_norm(n, alpha), 10))
