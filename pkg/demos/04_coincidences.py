# coding: utf-8

# # How many distinct extensions per degree?
#
# Different constructions can give proportional g-polynomials, and hence the
# same potential. Grouping them (for symbolic alpha) counts what is really new.

# In[1]:

from xlaguerre.eop import detect_coincidences, distinct_counts

classes = detect_coincidences(max_mu=4)
print(distinct_counts(classes))


# In[2]:

for c in classes:
    print(c.degree, c.members)
