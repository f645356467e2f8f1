"""Nerves of small categories and the simplicial set Ret.

Run: python demos/ret_and_nerve.py
"""

from moritakit import simpset as SS
from moritakit.fincat import standard_category

for name in ("Idem", "Split", "J"):
    print(f"N({name}) simplices by level:", SS.nerve(standard_category(name), 3).counts())

ret, rho = SS.build_ret(4)
print("Ret nondegenerate counts:", ret.nondegenerate_counts())
print("rho: Ret -> N(Split) is mono:", rho.is_mono())
