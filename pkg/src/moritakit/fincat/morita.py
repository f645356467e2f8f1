"""Morita equivalence of finite categories: definitional check and the Karoubi oracle."""

from dataclasses import dataclass, field

from ..errors import OracleDisagreement
from .karoubi import karoubi_envelope, karoubi_functor


@dataclass(frozen=True)
class MoritaReport:
    fully_faithful: bool
    essentially_surjective: bool
    essentially_surjective_up_to_retracts: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def verdict(self):
        return self.fully_faithful and self.essentially_surjective_up_to_retracts

    def to_json(self):
        return {
            "ff": self.fully_faithful,
            "essentially_surjective": self.essentially_surjective,
            "retracts": self.essentially_surjective_up_to_retracts,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
        }


def is_fully_faithful(F):
    S, T = F.source, F.target
    for x in S.objects:
        for y in S.objects:
            src = S.hom(x, y)
            tgt = T.hom(F.obj_map[x], F.obj_map[y])
            if len(src) != len(tgt) or len({F.mor_map[m] for m in src}) != len(tgt):
                return False
    return True


def iso_witness(F, d):
    """Least ``(c, g)`` with ``g: F(c) -> d`` an isomorphism."""
    T = F.target
    for c in F.source.objects:
        for g in T.hom(F.obj_map[c], d):
            if T.inverse(g) is not None:
                return (c, g)
    return None


def retract_witness(C, d, x):
    """Least ``(r, i)`` with ``r: x -> d``, ``i: d -> x`` and ``r.i = id_d``."""
    for r in C.hom(x, d):
        for i in C.hom(d, x):
            if C.compose(r, i) == C.identity[d]:
                return (r, i)
    return None


def morita_report(F):
    """Fully faithful and essentially-surjective-up-to-retracts check of ``F``."""
    T = F.target
    witnesses = {}
    es = True
    esr = True
    for d in T.objects:
        iso = iso_witness(F, d)
        ret = None
        for c in F.source.objects:
            w = retract_witness(T, d, F.obj_map[c])
            if w is not None:
                ret = (c, *w)
                break
        witnesses[d] = {"iso": iso, "retract": ret}
        es = es and iso is not None
        esr = esr and ret is not None
    return MoritaReport(is_fully_faithful(F), es, esr, witnesses)


def is_equivalence(F):
    if not is_fully_faithful(F):
        return False
    return all(iso_witness(F, d) is not None for d in F.target.objects)


def morita_cross_check(F, strict=True):
    """Compare the definitional verdict with ``is_equivalence(Karoubi(F))``.

    Returns ``True`` when the routes agree.  With ``strict`` a disagreement
    raises :class:`OracleDisagreement`.
    """
    verdict = morita_report(F).verdict
    KC, _ = karoubi_envelope(F.source)
    KD, _ = karoubi_envelope(F.target)
    oracle = is_equivalence(karoubi_functor(F, KC, KD))
    if verdict != oracle and strict:
        raise OracleDisagreement(
            f"Morita verdict {verdict} but Karoubi equivalence {oracle}", F.to_json()
        )
    return verdict == oracle
