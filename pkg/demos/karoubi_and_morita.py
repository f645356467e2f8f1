"""Idempotent completion and Morita equivalence on the two smallest examples.

Run: python demos/karoubi_and_morita.py
"""

from moritakit import fincat as FC

idem = FC.standard_category("Idem")
split = FC.standard_category("Split")

print("Idem is Cauchy complete:", FC.is_cauchy_complete(idem))
print("Split is Cauchy complete:", FC.is_cauchy_complete(split))

K, unit = FC.karoubi_envelope(idem)
print(f"Karoubi envelope of Idem: {len(K.objects)} objects, {len(K.morphisms)} morphisms")
equivalences = [F for F in FC.enumerate_functors(split, K) if FC.is_equivalence(F)]
print("equivalences Split -> K(Idem):", len(equivalences))

f = FC.iota()
report = FC.morita_report(f)
print("iota: Idem -> Split is Morita:", report.verdict, "| equivalence:", FC.is_equivalence(f))
print("retract of 1 onto 0 in Split:", FC.retract_witness(split, "1", "0"))
