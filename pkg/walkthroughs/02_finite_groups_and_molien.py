"""
Finite subgroups of U(2) and their Molien series
================================================

Build a few Du Val groups exactly over cyclotomic fields, list their
pseudoreflections, and compare Molien series against closed forms.
"""

from collections import Counter

from circquot.exactalg import taylor_coefficients
from circquot.u2_catalog import (
    DuValSpec,
    duval_group,
    enumerate_groups_of_order,
    gamma_finite_closed_form,
    molien_real,
    typeIII_closed_form,
    typeIIIprime_closed_form,
    typeIIIprime_printed_form,
)

# Type II with m = 2: two order-2 pseudoreflections
G = duval_group(DuValSpec("II", 2, 1))
print(G, "pseudoreflections:", G.pseudoreflections)
md = molien_real(G)
print("Molien:", md.series)
print("gamma0, gamma2 from the series:", md.gamma0, md.gamma2)
print("gamma0, gamma2 from the primitive set:", *gamma_finite_closed_form(G))

# Type III with m = 1 matches its closed form
for ell in (2, 3):
    s = molien_real(duval_group(DuValSpec("III", 1, ell))).series
    print(f"III(1, {ell}) closed form holds:", s == typeIII_closed_form(ell))

# Type III' with m = 1: the typo variant is off, the corrected form is exact
s = molien_real(duval_group(DuValSpec("III'", 1, 3))).series
print("typo variant equal:", s == typeIIIprime_printed_form(3))
print("corrected form equal:", s == typeIIIprime_closed_form(3))
print("head:", list(taylor_coefficients(s, 4)))

# the groups of order 28, as the audit of (-6, 10, 15) will need them
specs = enumerate_groups_of_order(28)
print(len(specs), "groups of order 28 by type:", Counter(s.type_tag for s in specs))
print([s.label() for s in specs if s.type_tag != "I"])
