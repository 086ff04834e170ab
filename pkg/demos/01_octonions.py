# coding: utf-8

# # Octonions by doubling
#
# Start from the reals and double three times. Each step adjoins v with
# v^2 = mu. With every mu = -1 we get the compact octonions, with mu = +1 the
# split ones, and over C all the choices collapse to a single algebra.

# In[1]:

import numpy as np

from excdom.cayley import (
    COMPLEX_OCTONIONS,
    SPLIT_OCTONIONS,
    CompositionElement,
    Signature,
    alternativity_witness,
    cd_multiply,
    element_norm,
    moufang_residuals,
    norm_weights,
)

rng = np.random.default_rng(1)


# The norm is diagonal in the doubling basis. Its signs are the products of
# the mu's that enter each basis vector, with a minus sign for every doubling.

# In[2]:

print(norm_weights(SPLIT_OCTONIONS.mu))


# Multiplicativity n(ab) = n(a) n(b) holds in every model.

# In[3]:

for sig in (Signature("R", (-1.0, -1.0, -1.0)), SPLIT_OCTONIONS, COMPLEX_OCTONIONS):
    dt = complex if sig.field == "C" else float
    a = CompositionElement(sig, rng.standard_normal(8).astype(dt))
    b = CompositionElement(sig, rng.standard_normal(8).astype(dt))
    print(sig, abs(element_norm(cd_multiply(a, b)) - element_norm(a) * element_norm(b)))


# The octonions are not associative, but the Moufang identities still hold.

# In[4]:

a, x, y = (CompositionElement(COMPLEX_OCTONIONS, rng.standard_normal(8) + 1j * rng.standard_normal(8)) for _ in range(3))
print(moufang_residuals(a, x, y))


# One more doubling is too many: the 16-dimensional algebra is not even
# alternative, and a random pair already exposes it.

# In[5]:

x, y, res = alternativity_witness(Signature("R", (-1.0,) * 4), rng)
print("|[x, ~x, y]| =", res)
