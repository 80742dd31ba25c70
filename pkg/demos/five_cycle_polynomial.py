"""The 32-factor difference product behind the five-cycle configuration.

Shows the -6 coefficient, how the generic host's availability bounds compare
with the reference table, and that fully joining the outer ends reproduces it.
"""

from strongcolor.nullstellensatz import LEMMA_C5_SIZES, LEMMA_C5_TARGET, cn_certificate, coefficient, lemma_c5_factors
from strongcolor.reducibility import REFERENCE_BOUNDS, build_configuration, c5_degenerations, stress_test

factors = lemma_c5_factors()
print(f"{len(factors)} factors; coefficient at {LEMMA_C5_TARGET} = {coefficient(factors, LEMMA_C5_TARGET)}")
cert = cn_certificate(LEMMA_C5_SIZES, factors)
print(f"certificate for sizes {LEMMA_C5_SIZES}: target {cert.target}, coefficient {cert.coefficient}")

c = build_configuration("c5", 10)
print("generic host bounds:   ", c.bounds)
print("reference table:       ", REFERENCE_BOUNDS["c5"])
print("generic conflict pairs:", len(c.conflicts))
generic = cn_certificate(c.bounds, c.conflict_pairs_1based())
print("certificate at the generic bounds:", generic.target if generic else None)
print(stress_test(c, 500, seed=1).summary())

for joined, d in c5_degenerations(10):
    if len(joined) == 5:
        print(f"outer ends joined by {joined}: bounds {d.bounds}, {len(d.conflicts)} conflict pairs")
