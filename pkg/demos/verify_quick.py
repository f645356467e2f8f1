"""A reduced run of the randomized verification suite.

Run: python demos/verify_quick.py
"""

from moritakit.cli import VerifyConfig, verify_suite

cfg = VerifyConfig(
    seed=3,
    sizes={"categories": 12, "functors": 20, "operads": 10, "maps": 15},
    only=("morita_karoubi", "cauchy_triple", "compose_laws", "finality"),
)
summary = verify_suite(cfg)
for entry in summary["properties"]:
    print(entry["status"].upper(), entry["property"], f"checked={entry['checked']}")
print("all passed:", summary["passed"])
