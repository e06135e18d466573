"""Genus bounds for the Artin covering, packaged as a versioned report.

The covering in question is the one classified by the kernel of the map
sending every standard Artin generator to the nontrivial deck
transformation. Its sectional genus is squeezed between rhvd + 1 from
below and vd + 1 from above; in the affine-like case (vd = hvd) the top
nerve homology is torsion free, the two bounds meet and the genus is
exactly vd + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .classify import all_proper_finite, classify
from .coxeter import CoxeterSystem
from .homology import HomologyGroup, d0_complex
from .nerve import NerveComplex, build_nerve
from .poly import poincare_polynomial

SCHEMA_VERSION = 1
MAX_REPORT_RANK = 24


@dataclass
class GenusReport:
    """Invariants and genus bounds of one Coxeter system."""

    system_name: str
    rank: int
    vd: int
    hvd: int | None
    rhvd: int | None
    affine_like: bool
    all_proper_finite: bool
    genus_lower: int
    genus_upper: int
    genus_exact: int | None
    homology_table: list[str]
    poincare_table: list[dict]
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "systemName": self.system_name,
            "rank": self.rank,
            "vd": self.vd,
            "hvd": self.hvd,
            "rhvd": self.rhvd,
            "affineLike": self.affine_like,
            "allProperFinite": self.all_proper_finite,
            "genusLower": self.genus_lower,
            "genusUpper": self.genus_upper,
            "genusExact": "unknown" if self.genus_exact is None else self.genus_exact,
            "homologyTable": list(self.homology_table),
            "poincareTable": [dict(row) for row in self.poincare_table],
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def parse_report(text: str) -> GenusReport:
    data = json.loads(text)
    if data.get("schemaVersion") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema: {data.get('schemaVersion')!r}")
    exact = data["genusExact"]
    return GenusReport(
        system_name=data["systemName"],
        rank=data["rank"],
        vd=data["vd"],
        hvd=data["hvd"],
        rhvd=data["rhvd"],
        affine_like=data["affineLike"],
        all_proper_finite=data["allProperFinite"],
        genus_lower=data["genusLower"],
        genus_upper=data["genusUpper"],
        genus_exact=None if exact == "unknown" else exact,
        homology_table=list(data["homologyTable"]),
        poincare_table=[dict(row) for row in data["poincareTable"]],
        notes=list(data["notes"]),
    )


def _invariants(homology: list[HomologyGroup]) -> tuple[int | None, int | None]:
    hvd = rhvd = None
    for k, h in enumerate(homology):
        if not h.is_trivial:
            hvd = k
        if h.free_rank > 0:
            rhvd = k
    return hvd, rhvd


def genus_report(
    sys: CoxeterSystem, system_name: str = "custom"
) -> GenusReport:
    if sys.rank > MAX_REPORT_RANK:
        raise ValueError(
            f"rank {sys.rank} exceeds the report cap of {MAX_REPORT_RANK} generators"
        )
    K = build_nerve(sys)
    vd = K.vd
    homology = d0_complex(K).homology_all()
    hvd, rhvd = _invariants(homology)
    affine_like = hvd == vd
    proper_finite = all_proper_finite(sys)
    genus_lower = 1 if rhvd is None else rhvd + 1
    genus_upper = vd + 1
    genus_exact = vd + 1 if affine_like else None

    poincare_table = []
    for J in K.maximal:
        poly = poincare_polynomial(sys, J)
        poincare_table.append(
            {"simplex": list(K.names(J)), "poincare": list(poly.coeffs)}
        )

    notes: list[str] = []
    whole = classify(sys)
    if whole.finite:
        notes.append(
            "Finite type: the nerve is a full simplex, hence acyclic, and "
            "only the interval [genusLower, genusUpper] is reported; the "
            "genus of such coverings can fall strictly below vd + 1."
        )
    if affine_like:
        notes.append(
            "Affine-like (vd = hvd): top nerve homology is torsion free, "
            "so the bounds meet and the genus equals vd + 1."
        )
    if proper_finite and not whole.finite:
        notes.append(
            "Every proper parabolic is finite: the nerve is the boundary "
            "of a simplex, a (rank - 2)-sphere."
        )

    return GenusReport(
        system_name=system_name,
        rank=sys.rank,
        vd=vd,
        hvd=hvd,
        rhvd=rhvd,
        affine_like=affine_like,
        all_proper_finite=proper_finite,
        genus_lower=genus_lower,
        genus_upper=genus_upper,
        genus_exact=genus_exact,
        homology_table=[str(h) for h in homology],
        poincare_table=poincare_table,
        notes=notes,
    )
