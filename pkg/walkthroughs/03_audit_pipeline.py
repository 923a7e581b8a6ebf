"""
Auditing weight vectors against finite quotients
================================================

Run the full audit on single vectors, re-check the exclusion certificates
from scratch, and scan a small box of n = 3 vectors.
"""

from collections import Counter

from circquot.auditor import audit, scan, summarize, verify_certificate, verify_paper_arguments

for w in [(1, 2, 3), (-1, 1), (-1, 2, 3), (-3, 6, 12, 4)]:
    rep = audit(w)
    print(w, "->", rep.verdict, rep.first_obstruction)

# every group of order 1/gamma0 = 28 gets a certificate
rep = audit((-6, 10, 15))
print(rep.verdict, "with", len(rep.candidates), "candidates")
print(Counter(c.obstruction for c in rep.candidates))
print("all certificates re-check:", all(verify_certificate(c, rep.normalized) for c in rep.candidates))
cert = rep.candidates[0]
print(cert.candidate.label(), cert.obstruction, cert.witness)

# small desk-scale scan
reports = scan(12, 3)
print(summarize(reports, 3, 12))

# the finite searches behind the arithmetic exclusions
for r in verify_paper_arguments(50):
    print(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.count})")
