# coding: utf-8

# # The two exceptional domains and their boundaries
#
# A point is inside when every root of m(T; x, x) is below 1. Stratum k of
# the boundary has exactly k roots equal to 1.

# In[1]:

import numpy as np

from excdom.albert import e
from excdom.cayley import null_unit_octonion
from excdom.compactify import embed_W, p_membership
from excdom.domains import boundary_report, classify, project_to_stratum_frame
from excdom.sampling import random_albert, random_w, rescale_to
from excdom.type_v import F2

rng = np.random.default_rng(3)


# Walk out along a random direction: the verdict flips exactly at spectral norm 1.

# In[2]:

u = rescale_to(random_albert(rng), 1.0)
for t in (0.5, 0.999, 1.0, 1.001):
    v = classify(u * t)
    print(t, v.location, v.stratum, v.confidence)


# The canonical tripotents sit on strata 1, 2, 3.

# In[3]:

for x in (e(1), e(1) + e(2), e(1) + e(2) + e(3)):
    v = classify(x)
    print(v.stratum, np.round(v.f, 12))


# A boundary point splits into a tripotent plus an interior point of its
# Peirce zero space.

# In[4]:

p = project_to_stratum_frame(e(1) + e(2) * 0.3 + e(3) * 0.2)
print(p.rank, p.residual_roots, p.ok)


# Geometry of the strata through rank-2 tripotents, in V and in W.

# In[5]:

print(boundary_report(e(1) + e(2))["boundary_part"])
print(boundary_report(F2(np.eye(8)[0]))["boundary_part"])


# W embeds in the cone of rank-one elements, and the chart inverts.

# In[6]:

w = random_w(rng)
z = embed_W(w)
print(z.residual(), np.linalg.norm(p_membership(z).element.v - w.v))
print(classify(F2(null_unit_octonion())).stratum)
