"""
Checking identity families over a box
=====================================

Each family is checked as exact polynomial equality for every tuple in
a parameter box. A failing tuple would be reported with its residual degree.
"""

from chebsurd import DEFAULT_BOUNDS, IdentityTag, identity_residual, identity_sweep

for tag in IdentityTag:
    report = identity_sweep(tag, DEFAULT_BOUNDS[tag])
    print(report.summary())

# a single instance, by hand: Cassini for U at n = 7
print(identity_residual(IdentityTag.VajdaUU, {"n": 7, "i": 0, "j": 0}))

# a wider box, same call
print(identity_sweep(IdentityTag.LemDouble, {"n": 80}).summary())
