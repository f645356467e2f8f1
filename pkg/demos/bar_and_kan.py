"""Homotopy left Kan extension along iota via the bar construction.

Run: python demos/bar_and_kan.py
"""

from moritakit import bar as BR
from moritakit.fincat import iota

f = iota()
for c in f.source.objects:
    X = BR.representable(f.source, c)
    for d in f.target.objects:
        hk = BR.ho_kan_extension(f, X, d, 3)
        colim = BR.kan_colim_oracle(f, X, d)
        print(f"c={c} d={d}: level counts {hk.counts()}, pi0={len(hk.pi0())}, coend classes={len(colim)}")
        print("  bar pi0 agrees with coend:", BR.compare_pi0(f, X, d, 3))
