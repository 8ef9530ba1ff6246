"""Decomposition reports: assembly, JSON round trip, and plain-text rendering."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .idempotents import quotient_genus
from .polarization import induced_form, polarization_type
from .search import CandidatePools, SearchResult

REPORT_VERSION = 1


@dataclass
class FactorRow:
    character: str
    subgroup_order: int
    subgroup_generators: list[str]
    dim: int
    lattice: list[list[int]]
    induced_form: list[list[int]]
    polarization_type: list[int]
    quotient_genus: int | None  # only when condition (ii) holds


@dataclass
class PoolRow:
    character: str
    degree: int
    schur_index: int
    n_factors: int
    isotypical_rank: int
    size: int
    condition_ii: bool


@dataclass
class DecompositionReport:
    group: str
    group_order: int
    genus: int
    pools: list[PoolRow]
    missing_pools: list[str]
    evaluated: int
    total_candidates: int
    budget: int | None
    budget_exhausted: bool
    kernel_order: int | None
    is_isomorphism: bool
    L_S: list[list[int]] | None
    choices: list[list[int]] | None
    factors: list[FactorRow]
    assumptions: list[str] = field(default_factory=list)
    trace: list[dict[str, Any]] | None = None
    schema_version: int = REPORT_VERSION

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> DecompositionReport:
        d = dict(d)
        d["pools"] = [PoolRow(**p) for p in d["pools"]]
        d["factors"] = [FactorRow(**f) for f in d["factors"]]
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> DecompositionReport:
        return cls.from_dict(json.loads(text))


def _gens(H) -> list[str]:
    G = H.parent
    return [G.word_of(g) for g in H.generators]


def build_report(
    name: str,
    cp: CandidatePools,
    result: SearchResult | None,
    budget: int | None,
) -> DecompositionReport:
    rep, table = cp.rep, cp.table
    assumptions = [
        "Schur indices taken from the character table input: "
        + ", ".join(f"{n}={m}" for n, m in zip(table.names, table.schur_index)),
        "candidates restricted to subgroup idempotents p_H e_i with dim V_i^H = m_i",
    ]
    pools = [
        PoolRow(
            character=p.character.name,
            degree=p.character.degree,
            schur_index=p.character.schur_index,
            n_factors=p.n_factors,
            isotypical_rank=p.isotypical_rank,
            size=len(p.members),
            condition_ii=bool(p.members) and all(m.condition_ii for m in p.members),
        )
        for p in cp.pools
    ]
    factors: list[FactorRow] = []
    best = result.best if result else None
    if best is not None:
        for pool, pick in zip(cp.pools, best.choices):
            for k in pick:
                m = pool.members[k]
                F = induced_form(m.factor.lattice, rep.form)
                factors.append(
                    FactorRow(
                        character=pool.character.name,
                        subgroup_order=m.order,
                        subgroup_generators=_gens(m.subgroup),
                        dim=m.factor.dim,
                        lattice=m.factor.lattice.matrix(),
                        induced_form=F,
                        polarization_type=list(polarization_type(F)),
                        quotient_genus=quotient_genus(rep, m.subgroup) if m.condition_ii else None,
                    )
                )
    trace = None
    if result is not None and result.trace:
        trace = [{"choices": [list(c) for c in ch], "kernel_order": k} for ch, k in result.trace]
    return DecompositionReport(
        group=name,
        group_order=rep.group.order,
        genus=rep.genus,
        pools=pools,
        missing_pools=list(cp.missing),
        evaluated=result.evaluated if result else 0,
        total_candidates=result.total if result else 0,
        budget=budget,
        budget_exhausted=bool(result and result.exhausted),
        kernel_order=best.kernel_order if best else None,
        is_isomorphism=bool(best and best.is_isomorphism),
        L_S=best.L if best else None,
        choices=[list(c) for c in best.choices] if best else None,
        factors=factors,
        assumptions=assumptions,
        trace=trace,
    )


def _matrix_text(M, indent="    ") -> str:
    if not M:
        return indent + "[]"
    w = max(len(str(x)) for row in M for x in row)
    return "\n".join(indent + "[" + " ".join(str(x).rjust(w) for x in row) + "]" for row in M)


def render_text(r: DecompositionReport) -> str:
    lines = [f"group {r.group} (order {r.group_order}), genus {r.genus}"]
    lines.append("pools:")
    for p in r.pools:
        lines.append(
            f"  {p.character}: degree {p.degree}, m={p.schur_index}, n={p.n_factors}, "
            f"isotypical rank {p.isotypical_rank}, {p.size} candidate subgroups"
            + (", condition (ii) holds" if p.condition_ii else "")
        )
    if r.missing_pools:
        lines.append("method inapplicable, no candidates for: " + ", ".join(r.missing_pools))
    lines.append(f"search: {r.evaluated} of {r.total_candidates} sets evaluated" + (f" (budget {r.budget})" if r.budget is not None else ""))
    if r.kernel_order is None:
        lines.append("no effective set found" + (" (budget exhausted)" if r.budget_exhausted else ""))
    else:
        if r.budget_exhausted:
            lines.append("budget exhausted; best set so far:")
        lines.append(f"|Kernel| = {r.kernel_order}" + ("  (isomorphism)" if r.is_isomorphism else ""))
        lines.append("L_S =")
        lines.append(_matrix_text(r.L_S))
        lines.append("factors:")
        for k, f in enumerate(r.factors, 1):
            q = f", J(X/H) of genus {f.quotient_genus}" if f.quotient_genus is not None else ""
            lines.append(
                f"  B{k} [{f.character}] from H = <{', '.join(f.subgroup_generators)}> "
                f"(order {f.subgroup_order}): dim {f.dim}, polarization type "
                f"({', '.join(map(str, f.polarization_type))}){q}"
            )
            lines.append(_matrix_text(f.lattice, "      "))
    for a in r.assumptions:
        lines.append(f"assumption: {a}")
    return "\n".join(lines) + "\n"
