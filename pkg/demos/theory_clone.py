"""Arrows of the algebraic theory attached to the operad B.

Run: python demos/theory_clone.py
"""

from moritakit import operad as OP
from moritakit import theory as TH

B = OP.operad_B()
for w in TH.words_up_to(B.colours, 2):
    for d in B.colours:
        n = len(TH.clone_hom(B, w, d))
        if n:
            print(f"T({','.join(w)}; {d}) has {n} element(s)")

print("arrows (a,a) -> (b,b):", TH.theory_hom_size(B, ("a", "a"), ("b", "b")))
print("B-algebras with carriers a=2, b=2:", len(OP.enumerate_algebras(B, {"a": 2, "b": 2})))
