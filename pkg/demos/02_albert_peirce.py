# coding: utf-8

# # H3(O): adjoint, triple product, Peirce spaces
#
# An element is three complex scalars on the diagonal and three complex
# octonions off it, 27 complex coordinates in all.

# In[1]:

import numpy as np

from excdom.albert import adjoint, determinant, diag, e
from excdom.jts import minimal_polynomial, spectral_decompose
from excdom.sampling import random_albert, random_frame
from excdom.tripotents import classify_tripotent, frame_invariants, peirce

rng = np.random.default_rng(2)


# On diagonal elements the adjoint is the classical one.

# In[2]:

x = diag(1, 2, 3)
print(adjoint(x).alpha, determinant(x))


# The minimal polynomial m(T; x, x) has the squared singular values as roots.

# In[3]:

print(minimal_polynomial(x, x).roots().real)


# A random element splits into three orthogonal minimal tripotents.

# In[4]:

z = random_albert(rng)
dec = spectral_decompose(z)
print(dec.values, np.linalg.norm(dec.reconstruct().v - z.v))


# Tripotents come in ranks 1, 2, 3, and their Peirce spaces have fixed dimensions.

# In[5]:

for t in (e(1), e(1) + e(2), e(1) + e(2) + e(3)):
    print(classify_tripotent(t).rank, peirce(t).dims)


# The joint Peirce decomposition of a frame gives the numerical invariants.

# In[6]:

inv = frame_invariants(list(random_frame(rng)))
print({k: inv[k] for k in "abrg"})
