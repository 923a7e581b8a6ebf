"""
Hilbert series of a circle quotient
===================================

Start from a weight vector, normalize it, count invariant monomials, rebuild
the on-shell Hilbert series as an exact rational function and read off its
Laurent coefficients at x = 1.
"""

from circquot.circle_quotient import (
    WeightVector,
    codim1_nodes,
    gamma_closed_form_n3,
    gamma_extracted,
    hilb_on_rational,
    hilb_on_series,
    normalize,
    predicates,
)

# normalization divides by the gcd and moves the lone negative weight first
A, log = normalize(WeightVector((4, -6, 20, 30)))
print("normalized:", A, "steps:", log.steps)

# the series starts 1, 0, 2 for generic n = 3 vectors
B = WeightVector((-6, 10, 15))
print("on-shell head:", [int(c) for c in hilb_on_series(B, 8)])

# exact rational function and its Laurent data
f = hilb_on_rational(B)
print("Hilb on-shell:", f)
ex = gamma_extracted(B, f)
cf = gamma_closed_form_n3(B)
print("extracted gamma0, gamma2:", ex.gamma0, ex.gamma2)
print("closed form gamma0, gamma2:", cf.gamma0, cf.gamma2)

# codimension-1 strata and the single-vector predicates
for node in codim1_nodes(B):
    print("codim-1 stratum on", sorted(node.support), "isotropy Z_%d" % node.isotropy_order)
rec = predicates(B)
print("flags:", rec.flags())

# a four-weight example with no chain of codimension-1 strata
C = WeightVector((-3, 6, 12, 4))
print("gamma0", gamma_extracted(C).gamma0, "reasons:", predicates(C).reasons)
