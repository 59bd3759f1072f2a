"""
Vérifications des conjectures, théorèmes et lemmes sur des entrées concrètes.

Chaque vérification retourne un CheckReport; un verdict « violated » est un
événement de recherche: il est journalisé en ERROR avec son témoin complet.
"""

import hashlib
import json
import logging
from typing import Iterable, Optional, Sequence

from src.algebra.ideal_format import format_ideal, parse_ideal
from src.algebra.lcm_lattice import realize_lattice
from src.algebra.monomials import (
    MonomialIdeal,
    UnitGenerator,
    colon_by_variable,
    disjoint_sum,
    is_generic,
)
from src.betti.invariants import betti_table, homological_summary, lattice_betti_elements, lattice_homology
from src.betti.taylor import scarf_complex
from src.homology.fields import FieldSpec
from src.lab.context import LabContext
from src.lab.models import CheckReport, Verdict
from src.lab.surjections import find_join_surjection, validate_join_surjection
from src.posets.canonical import canonical_form
from src.posets.lattice import (
    FiniteLattice,
    NotALattice,
    NotMeetIrreducible,
    boolean_algebra,
    decreasing_rank_chain,
    meet_closure,
    meet_irreducibles,
    rank,
    remove_element,
)
from src.posets.maps import is_join_preserving, is_surjective
from src.posets.poset import augment_with_top, length
from src.stanley.characteristic import Side
from src.utils.resilience import ScanMonitor, safe_execute

logger = logging.getLogger("bettilab.lab")


class NotSquarefree(ValueError):
    """La vérification exige un idéal squarefree."""
    pass


class NotGeneric(ValueError):
    """La vérification exige un idéal générique."""
    pass


# === Utilitaires ===

def _inputs(context: LabContext, *ideals: MonomialIdeal, **extra) -> dict:
    inputs = {
        "fingerprints": [ideal.fingerprint for ideal in ideals],
        "field": str(context.field),
        "ideals": [format_ideal(ideal) for ideal in ideals],
    }
    inputs.update(extra)
    return inputs


def _finish(report: CheckReport) -> CheckReport:
    """Journalise le verdict; une violation part en ERROR avec son témoin."""
    if report.is_violation:
        logger.error(
            f"VIOLATION {report.check} sur {report.fingerprint}: "
            f"{json.dumps(report.witness, sort_keys=True)}"
        )
    else:
        logger.info(f"{report.check} {report.fingerprint}: {report.verdict.value}")
    return report


def _degree_list(lcm, node: int) -> list[int]:
    return list(lcm.degree(node).exponents)


def betti_form(ideal: MonomialIdeal, context: LabContext, field: Optional[FieldSpec] = None) -> bytes:
    """Forme canonique du poset de Betti de I sur le corps donné."""
    lattice = context.lattice(ideal).lattice
    nodes = lattice_betti_elements(lattice, field or context.field)
    return canonical_form(lattice.base.induced(nodes))


def _form_id(form: bytes) -> str:
    return hashlib.sha256(form).hexdigest()[:16]


def lattice_pdim(lattice: FiniteLattice, field: FieldSpec) -> int:
    """pdim au niveau du treillis: plus grand i avec h̃_{i−2}((0̂, m)) ≠ 0."""
    return max(
        (d + 2 for ranks in lattice_homology(lattice, field).values() for d in ranks),
        default=0,
    )


# === Théorème des surjections ===

def surjection_monotonicity_check(
    first: MonomialIdeal, second: MonomialIdeal, context: Optional[LabContext] = None
) -> CheckReport:
    """
    Si L_I → L_{I'} est une surjection préservant les joins, alors pdim et spdim
    de S'/I' et de I' sont au plus ceux de S/I et de I.
    """
    ctx = context or LabContext()
    lcm1, lcm2 = ctx.lattice(first), ctx.lattice(second)
    images = find_join_surjection(lcm1.lattice, lcm2.lattice, ctx.surjection_budget)
    inputs = _inputs(ctx, first, second)
    if images is None:
        quantities = {"surjection": None, "budget_exhausted": False}
        return _finish(CheckReport("surjection-monotonicity", inputs, quantities, Verdict.UNKNOWN))

    surjection = [[_degree_list(lcm1, a), _degree_list(lcm2, b)] for a, b in sorted(images.items())]
    s1 = homological_summary(first, ctx.field, betti_table(first, ctx.field, lcm1))
    s2 = homological_summary(second, ctx.field, betti_table(second, ctx.field, lcm2))
    sq1, sq2 = ctx.sdepth(first, Side.QUOTIENT), ctx.sdepth(second, Side.QUOTIENT)
    si1, si2 = ctx.sdepth(first, Side.IDEAL), ctx.sdepth(second, Side.IDEAL)

    comparisons = {
        "pdim_quotient": (s2.pdim_quotient, s1.pdim_quotient),
        "pdim_ideal": (s2.pdim_ideal, s1.pdim_ideal),
        "spdim_quotient": (sq2.spdim, sq1.spdim),
        "spdim_ideal": (si2.spdim, si1.spdim),
    }
    failed = [name for name, (target, source) in comparisons.items() if target > source]
    quantities = {
        "surjection": surjection,
        "surjection_validated": validate_join_surjection(lcm1.lattice, lcm2.lattice, images),
        **{name: {"source": source, "target": target} for name, (target, source) in comparisons.items()},
    }
    witness = None
    if failed:
        witness = {
            "failed": failed,
            "surjection": surjection,
            "certificates": [r.certificate.to_json() for r in (sq1, sq2, si1, si2)],
        }
    verdict = Verdict.VIOLATED if failed else Verdict.HOLDS
    return _finish(CheckReport("surjection-monotonicity", inputs, quantities, verdict, witness))


# === Chaîne L_I ⊋ ... ⊋ M(B) ===

def mb_chain_check(ideal: MonomialIdeal, context: Optional[LabContext] = None) -> CheckReport:
    """
    Plonge B(I) par supports d'atomes, forme M(B) (avec l'image ∅ de 0̂), retire
    L_I ∖ M(B) par rang décroissant et vérifie que le poset de Betti ne change
    à aucune étape.

    Raises:
        StepNotLattice: une étape intermédiaire n'est pas un treillis
    """
    ctx = context or LabContext()
    lcm = ctx.lattice(ideal)
    lattice = lcm.lattice
    betti_nodes = lattice_betti_elements(lattice, ctx.field)

    position = {a: t + 1 for t, a in enumerate(lattice.atoms)}

    def support(x: int) -> frozenset:
        return frozenset(position[a] for a in lattice.atoms_below(x))

    family = [sorted(support(b)) for b in sorted(betti_nodes)] + [[]]
    closure = meet_closure(len(lattice.atoms), family)
    closed_sets = {frozenset(name) for name in closure.base.names}
    keep = [x for x in range(lattice.size) if support(x) in closed_sets]

    chain = decreasing_rank_chain(lattice, keep)
    reference_form = canonical_form(lattice.base.induced(betti_nodes))
    reference_names = {lattice.name(b) for b in betti_nodes}

    changed_steps = []
    for step, current in enumerate(chain):
        current_betti = lattice_betti_elements(current, ctx.field)
        names = {current.name(x) for x in current_betti}
        if names != reference_names or canonical_form(current.base.induced(current_betti)) != reference_form:
            changed_steps.append(step)

    removed = sorted(
        (x for x in range(lattice.size) if x not in set(keep)),
        key=lambda x: (-rank(lattice, x), x),
    )
    removed_betti = [x for x in removed if x in betti_nodes]
    consistent = len(keep) == closure.size and len(chain) - 1 == lattice.size - len(keep)

    quantities = {
        "lattice_size": lattice.size,
        "betti_size": len(betti_nodes),
        "mb_size": len(keep),
        "chain_length": len(chain) - 1,
        "removed": [_degree_list(lcm, x) for x in removed],
        "consistent": consistent,
    }
    witness = None
    if changed_steps or removed_betti or not consistent:
        witness = {
            "changed_steps": changed_steps,
            "removed_betti_elements": [_degree_list(lcm, x) for x in removed_betti],
            "consistent": consistent,
        }
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("mb-chain", _inputs(ctx, ideal), quantities, verdict, witness))


# === Conjecture en un pas ===

def check_onestep(ideal: MonomialIdeal, variable: str, context: Optional[LabContext] = None) -> CheckReport:
    """
    I' = (I : v). Si B(I) ≅ B(I'), vérifie sdepth S/I = sdepth S/I' et
    sdepth I = sdepth I'. Les inégalités de restriction sdepth S/I ≤ sdepth S/I'
    et sdepth I ≤ sdepth I' sont vérifiées dans tous les cas.

    Raises:
        NotSquarefree: I n'est pas squarefree
        UnknownVariable: v n'est pas une variable de l'anneau
    """
    ctx = context or LabContext()
    if not ideal.is_squarefree:
        raise NotSquarefree(f"{ideal.format()} n'est pas squarefree")
    try:
        colon = colon_by_variable(ideal, variable)
    except UnitGenerator:
        quantities = {"variable": variable, "colon": "unit"}
        return _finish(CheckReport(
            "onestep", _inputs(ctx, ideal, variable=variable), quantities, Verdict.NOT_APPLICABLE
        ))

    isomorphic = betti_form(ideal, ctx) == betti_form(colon, ctx)
    sq, sq_colon = ctx.sdepth(ideal, Side.QUOTIENT), ctx.sdepth(colon, Side.QUOTIENT)
    si, si_colon = ctx.sdepth(ideal, Side.IDEAL), ctx.sdepth(colon, Side.IDEAL)
    restriction = sq.value <= sq_colon.value and si.value <= si_colon.value
    equalities = sq.value == sq_colon.value and si.value == si_colon.value

    quantities = {
        "variable": variable,
        "betti_isomorphic": isomorphic,
        "sdepth_quotient": sq.value,
        "sdepth_quotient_colon": sq_colon.value,
        "sdepth_ideal": si.value,
        "sdepth_ideal_colon": si_colon.value,
        "restriction_inequalities": restriction,
    }

    witness = None
    if not restriction or (isomorphic and not equalities):
        verdict = Verdict.VIOLATED
        witness = {
            "kind": "restriction" if not restriction else "conjecture",
            "certificates": [r.certificate.to_json() for r in (sq, sq_colon, si, si_colon)],
        }
    elif isomorphic:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.NOT_APPLICABLE
    return _finish(CheckReport(
        "onestep", _inputs(ctx, ideal, colon, variable=variable), quantities, verdict, witness
    ))


# === Conjecture sur les classes de posets de Betti ===

def _scan_member(ideal: MonomialIdeal, context: LabContext) -> dict:
    return {
        "ideal": ideal,
        "form": _form_id(betti_form(ideal, context)),
        "spdim_quotient": context.sdepth(ideal, Side.QUOTIENT).spdim,
        "spdim_ideal": context.sdepth(ideal, Side.IDEAL).spdim,
    }


def _unique_by_fingerprint(corpus: Iterable[MonomialIdeal]) -> list[MonomialIdeal]:
    members = {ideal.fingerprint: ideal for ideal in corpus}
    return [members[fp] for fp in sorted(members)]


def conjecture_scan(
    corpus: Iterable[MonomialIdeal],
    context: Optional[LabContext] = None,
    monitor: Optional[ScanMonitor] = None,
) -> CheckReport:
    """
    Regroupe le corpus par forme canonique de B(I); dans chaque classe,
    spdim S/I et spdim I doivent être constants.

    Un membre dont le budget est épuisé est ignoré et journalisé; le verdict
    devient alors « unknown » s'il n'y a pas de violation.
    """
    ctx = context or LabContext()
    monitor = monitor if monitor is not None else ScanMonitor()
    members = _unique_by_fingerprint(corpus)

    rows = []
    for ideal in members:
        row, _ = safe_execute(_scan_member, ideal, ctx, member=ideal.fingerprint, monitor=monitor)
        if row is not None:
            rows.append(row)

    classes: dict[str, list[dict]] = {}
    for row in rows:
        classes.setdefault(row["form"], []).append(row)

    violations = []
    summary = []
    for form in sorted(classes):
        group = classes[form]
        summary.append({
            "betti_form": form,
            "size": len(group),
            "spdim_quotient": sorted({r["spdim_quotient"] for r in group}),
            "spdim_ideal": sorted({r["spdim_ideal"] for r in group}),
        })
        base = group[0]
        for other in group[1:]:
            for key in ("spdim_quotient", "spdim_ideal"):
                if other[key] != base[key]:
                    violations.append({
                        "betti_form": form,
                        "quantity": key,
                        "ideals": [format_ideal(base["ideal"]), format_ideal(other["ideal"])],
                        "values": [base[key], other[key]],
                    })

    quantities = {
        "members": len(members),
        "processed": len(rows),
        "classes": summary,
        "skipped": monitor.skipped_members,
        "budget_exhausted": monitor.budget_exhausted,
    }
    inputs = {"fingerprints": [r["ideal"].fingerprint for r in rows], "field": str(ctx.field)}
    if violations:
        verdict, witness = Verdict.VIOLATED, {"violations": violations}
    elif monitor.skipped_members:
        verdict, witness = Verdict.UNKNOWN, None
    else:
        verdict, witness = Verdict.HOLDS, None
    return _finish(CheckReport("conjecture-scan", inputs, quantities, verdict, witness))


def field_sensitivity(
    corpus: Iterable[MonomialIdeal],
    fields: Sequence[FieldSpec],
    context: Optional[LabContext] = None,
) -> CheckReport:
    """Membres dont la forme canonique de B(I) change d'un corps à l'autre."""
    ctx = context or LabContext()
    members = _unique_by_fingerprint(corpus)
    sensitive = []
    for ideal in members:
        forms = {_form_id(betti_form(ideal, ctx, f)) for f in fields}
        if len(forms) > 1:
            sensitive.append(ideal)

    quantities = {
        "fields": [str(f) for f in fields],
        "members": len(members),
        "sensitive": [ideal.fingerprint for ideal in sensitive],
    }
    inputs = {"fingerprints": [ideal.fingerprint for ideal in members], "field": ",".join(map(str, fields))}
    if sensitive:
        witness = {"ideals": [format_ideal(ideal) for ideal in sensitive]}
        return _finish(CheckReport("field-sensitivity", inputs, quantities, Verdict.FIELD_SENSITIVE, witness))
    return _finish(CheckReport("field-sensitivity", inputs, quantities, Verdict.HOLDS))


# === Bornes ===

def stanley_bounds_check(ideal: MonomialIdeal, context: Optional[LabContext] = None) -> CheckReport:
    """sdepth S/I ≥ depth S/I − 1 et sdepth I ≥ depth I."""
    ctx = context or LabContext()
    summary = homological_summary(ideal, ctx.field, betti_table(ideal, ctx.field, ctx.lattice(ideal)))
    sq, si = ctx.sdepth(ideal, Side.QUOTIENT), ctx.sdepth(ideal, Side.IDEAL)
    quotient_ok = sq.value >= summary.depth_quotient - 1
    ideal_ok = si.value >= summary.depth_ideal

    quantities = {
        "sdepth_quotient": sq.value,
        "depth_quotient": summary.depth_quotient,
        "sdepth_ideal": si.value,
        "depth_ideal": summary.depth_ideal,
    }
    witness = None
    if not (quotient_ok and ideal_ok):
        witness = {
            "failed": [name for name, ok in (("quotient", quotient_ok), ("ideal", ideal_ok)) if not ok],
            "certificates": [sq.certificate.to_json(), si.certificate.to_json()],
        }
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("stanley-bounds", _inputs(ctx, ideal), quantities, verdict, witness))


def length_bounds_check(ideal: MonomialIdeal, context: Optional[LabContext] = None) -> CheckReport:
    """spdim S/I ≤ ℓ(L_I) et spdim I ≤ ℓ(L_I) − 1 (chaînes comptées depuis 0̂)."""
    ctx = context or LabContext()
    lattice = ctx.lattice(ideal).lattice
    ell = length(lattice.base)
    sq, si = ctx.sdepth(ideal, Side.QUOTIENT), ctx.sdepth(ideal, Side.IDEAL)

    # ℓ(B(I) ∪ {0̂, 1̂})
    betti_nodes = lattice_betti_elements(lattice, ctx.field) | {lattice.bottom}
    augmented = augment_with_top(lattice.base.induced(betti_nodes))

    quotient_ok = sq.spdim <= ell
    ideal_ok = si.spdim <= ell - 1
    quantities = {
        "length": ell,
        "spdim_quotient": sq.spdim,
        "spdim_ideal": si.spdim,
        "length_augmented_betti": length(augmented),
    }
    witness = None
    if not (quotient_ok and ideal_ok):
        witness = {
            "failed": [name for name, ok in (("quotient", quotient_ok), ("ideal", ideal_ok)) if not ok],
            "certificates": [sq.certificate.to_json(), si.certificate.to_json()],
        }
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("length-bounds", _inputs(ctx, ideal), quantities, verdict, witness))


# === Lemme de réduction ===

def reduction_lemma_check(
    lattice: FiniteLattice,
    element: int,
    p: Optional[int] = None,
    context: Optional[LabContext] = None,
) -> CheckReport:
    """
    Pour a meet-irréductible avec rk a < 2p:
    spdim_I L ≤ max(p, spdim_I L ∖ {a}).

    Les deux treillis sont réalisés par des idéaux squarefree (un générateur par
    atome, une variable par meet-irréductible autre que le sommet) puis passés
    au moteur sdepth côté idéal.

    Raises:
        NotMeetIrreducible: a n'est pas meet-irréductible
    """
    ctx = context or LabContext()
    lattice.base.check_node(element)
    if element not in meet_irreducibles(lattice):
        raise NotMeetIrreducible(f"{lattice.name(element)!r} n'est pas meet-irréductible")

    realized = realize_lattice(lattice)
    p = p if p is not None else lattice_pdim(lattice, ctx.field)
    rk = rank(lattice, element)
    label = lattice.label(element)
    inputs = _inputs(
        ctx, realized,
        element=list(label.exponents) if label is not None else repr(lattice.name(element)),
    )
    quantities = {"lattice_size": lattice.size, "rank": rk, "p": p}

    def not_applicable(reason: str) -> CheckReport:
        quantities["reason"] = reason
        return _finish(CheckReport("reduction-lemma", inputs, quantities, Verdict.NOT_APPLICABLE))

    if element == lattice.bottom:
        return not_applicable("bottom")
    if rk >= 2 * p:
        return not_applicable("rank")
    try:
        reduced = remove_element(lattice, element)
    except NotALattice:
        return not_applicable("not-a-lattice")
    if reduced.size < 2 or not reduced.atoms or not reduced.atomistic:
        return not_applicable("degenerate")

    realized_reduced = realize_lattice(reduced)
    sp = ctx.sdepth(realized, Side.IDEAL).spdim
    sp_reduced = ctx.sdepth(realized_reduced, Side.IDEAL).spdim
    quantities.update({
        "spdim_ideal": sp,
        "spdim_ideal_reduced": sp_reduced,
        "realized_reduced": format_ideal(realized_reduced),
    })
    witness = None
    if sp > max(p, sp_reduced):
        witness = {"ideals": [format_ideal(realized), format_ideal(realized_reduced)]}
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("reduction-lemma", inputs, quantities, verdict, witness))


# === Idéaux génériques ===

def _boolean_surjection(target_lattice: FiniteLattice, scarf_nodes: set[int], p: int, context: LabContext):
    """
    Surjection L_{I'} → algèbre de Boole à p atomes: d'abord b ↦ atomes sous b ∧ a
    pour un a de Δ(I') de rang p, sinon recherche exacte.
    """
    boolean = boolean_algebra(p)
    candidates = [a for a in sorted(scarf_nodes) if rank(target_lattice, a) == p]
    for a in candidates:
        position = {x: t + 1 for t, x in enumerate(target_lattice.atoms_below(a))}
        images = tuple(
            boolean.base.index(tuple(sorted(
                position[x] for x in target_lattice.atoms_below(target_lattice.meet(b, a))
            )))
            for b in range(target_lattice.size)
        )
        if is_join_preserving(target_lattice, boolean, images) and is_surjective(boolean, images):
            return candidates, "meet-with-rank-p-element"
    if find_join_surjection(target_lattice, boolean, context.surjection_budget) is not None:
        return candidates, "search"
    return candidates, None


def generic_weak_check(
    ideal: MonomialIdeal, other: MonomialIdeal, context: Optional[LabContext] = None
) -> CheckReport:
    """
    I générique, L_I → L_{I'} surjective préservant les joins et B(I) ≅ B(I'):
    vérifie spdim S/I = spdim S'/I' et les faits intermédiaires de la preuve.

    Raises:
        NotGeneric: I n'est pas générique
    """
    ctx = context or LabContext()
    if not is_generic(ideal):
        raise NotGeneric(f"{ideal.format()} n'est pas générique")

    lcm1, lcm2 = ctx.lattice(ideal), ctx.lattice(other)
    inputs = _inputs(ctx, ideal, other)
    if find_join_surjection(lcm1.lattice, lcm2.lattice, ctx.surjection_budget) is None:
        return _finish(CheckReport("generic-weak", inputs, {"reason": "no-surjection"}, Verdict.NOT_APPLICABLE))
    if betti_form(ideal, ctx) != betti_form(other, ctx):
        return _finish(CheckReport("generic-weak", inputs, {"reason": "betti-not-isomorphic"}, Verdict.NOT_APPLICABLE))

    betti1 = lattice_betti_elements(lcm1.lattice, ctx.field)
    betti2 = lattice_betti_elements(lcm2.lattice, ctx.field)
    scarf1 = set(scarf_complex(ideal).nodes)
    scarf2 = set(scarf_complex(other).nodes)
    p = homological_summary(ideal, ctx.field, betti_table(ideal, ctx.field, lcm1)).pdim_quotient
    candidates, method = _boolean_surjection(lcm2.lattice, scarf2, p, ctx)

    spdim1 = ctx.sdepth(ideal, Side.QUOTIENT).spdim
    spdim2 = ctx.sdepth(other, Side.QUOTIENT).spdim
    facts = {
        "betti_equals_scarf": betti1 == scarf1,
        "betti_equals_scarf_target": betti2 == scarf2,
        "rank_p_element": bool(candidates),
        "boolean_surjection": method is not None,
        "sandwich": p <= spdim2 <= spdim1 <= p,
    }
    quantities = {
        "p": p,
        "spdim_quotient": spdim1,
        "spdim_quotient_target": spdim2,
        "boolean_surjection_method": method,
        **facts,
    }
    failed = [name for name, ok in facts.items() if not ok]
    if spdim1 != spdim2:
        failed.append("conclusion")
    witness = {"failed": failed, "rank_p_elements": [_degree_list(lcm2, a) for a in candidates]} if failed else None
    verdict = Verdict.VIOLATED if failed else Verdict.HOLDS
    return _finish(CheckReport("generic-weak", inputs, quantities, verdict, witness))


# === Propriétés complémentaires ===

def superadditivity_check(
    first: MonomialIdeal, second: MonomialIdeal, context: Optional[LabContext] = None
) -> CheckReport:
    """sdepth S''/(I ⊕ I') ≥ sdepth S/I + sdepth S'/I'."""
    ctx = context or LabContext()
    combined = disjoint_sum(first, second)
    s1 = ctx.sdepth(first, Side.QUOTIENT).value
    s2 = ctx.sdepth(second, Side.QUOTIENT).value
    total = ctx.sdepth(combined, Side.QUOTIENT)
    quantities = {"sdepth_first": s1, "sdepth_second": s2, "sdepth_sum": total.value}
    witness = None
    if total.value < s1 + s2:
        witness = {"certificate": total.certificate.to_json()}
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("superadditivity", _inputs(ctx, first, second), quantities, verdict, witness))


SMALL_GENERATOR_LIMIT = 5


def small_generator_check(ideal: MonomialIdeal, context: Optional[LabContext] = None) -> CheckReport:
    """Jusqu'à cinq générateurs minimaux: spdim S/I = pdim S/I."""
    ctx = context or LabContext()
    k = len(ideal.generators)
    inputs = _inputs(ctx, ideal)
    if k > SMALL_GENERATOR_LIMIT:
        return _finish(CheckReport("small-generators", inputs, {"generators": k}, Verdict.NOT_APPLICABLE))

    pdim = homological_summary(ideal, ctx.field, betti_table(ideal, ctx.field, ctx.lattice(ideal))).pdim_quotient
    result = ctx.sdepth(ideal, Side.QUOTIENT)
    quantities = {"generators": k, "pdim_quotient": pdim, "spdim_quotient": result.spdim}
    witness = None
    if pdim != result.spdim:
        witness = {"certificate": result.certificate.to_json()}
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    return _finish(CheckReport("small-generators", inputs, quantities, verdict, witness))


# === Rejeu ===

def replay(report: CheckReport, context: Optional[LabContext] = None) -> CheckReport:
    """Relance une vérification à partir des textes `.ideal` de ses entrées."""
    ctx = context or LabContext(field=FieldSpec.parse(report.inputs.get("field", "q")))
    ideals = [parse_ideal(text) for text in report.inputs.get("ideals", [])]
    single = {
        "mb-chain": mb_chain_check,
        "stanley-bounds": stanley_bounds_check,
        "length-bounds": length_bounds_check,
        "small-generators": small_generator_check,
    }
    pairs = {
        "surjection-monotonicity": surjection_monotonicity_check,
        "generic-weak": generic_weak_check,
        "superadditivity": superadditivity_check,
    }
    if report.check in single:
        return single[report.check](ideals[0], ctx)
    if report.check in pairs:
        return pairs[report.check](ideals[0], ideals[1], ctx)
    if report.check == "onestep":
        return check_onestep(ideals[0], report.inputs["variable"], ctx)
    raise ValueError(f"Vérification non rejouable: {report.check}")
