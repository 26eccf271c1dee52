"""Where the semistable locus meets the singular locus.

The smooth-quotient question reduces to a finite comparison: collect the
maximal torus-fixed indices that are singular on X(w) (the tops of the
singular components) and the minimal ones below w whose variety carries
semistable points, then ask whether any singular top dominates a
semistable bottom.  If none does, the semistable locus stays inside the
smooth locus and, when the torus acts with trivial generic stabilizer,
the quotient is smooth.

Three independent computations of the same verdict are wired up here for
Grassmannians: the diagram criterion, the direct component comparison,
and the quiver criterion; in the other minuscule types only the last two
exist.
"""

from math import gcd

from . import grassmannian as gr
from . import quiver as qv
from . import smt
from .rootdata import root_system


def e_sing_gr(w, r, n):
    """Maximal singular fixed indices of X_w: the singular component tops."""
    lam = gr.indexset_to_partition(w, r, n)
    return [
        gr.partition_to_indexset(mu, r, n)
        for mu in gr.singular_components(lam, r, n)
    ]


def e_ss_gr(w, r, n, sweep=None):
    """Minimal semistable indices below w, with both closed forms attached.

    ``minimal`` is the ceiling form (the true minimum), ``formula`` the
    two-branch variant kept for comparison; a warning records any
    disagreement.  ``sweep`` additionally re-derives the minimum by
    exhaustive invariant search (default: only when gcd(r, n) > 1, where
    the search degree stays small).
    """
    w = gr.check_indexset(w, r, n)
    v = gr.minimal_semistable(r, n)
    formula_v = gr.minimal_semistable_formula(r, n)
    warnings = []
    if formula_v != v:
        warnings.append(
            f"two-branch closed form {formula_v} overshoots the minimal "
            f"semistable element {v}"
        )
    if sweep is None:
        sweep = gcd(r, n) > 1
    oracle_heads = None
    if sweep:
        oracle_heads = smt.minimal_semistable_oracle_gr(r, n)
        if sorted(oracle_heads) != [v]:
            warnings.append(
                f"swept minima {sorted(oracle_heads)} disagree with the "
                f"ceiling form {v}; using the swept values"
            )
    heads = oracle_heads if oracle_heads is not None else [v]
    below = [h for h in heads if gr.indexset_leq(h, w)]
    elements = [
        h
        for h in below
        if not any(u != h and gr.indexset_leq(u, h) for u in below)
    ]
    return {
        "elements": elements,
        "minimal": v,
        "formula": formula_v,
        "oracle": oracle_heads,
        "warnings": warnings,
    }


def semistable_meets_singular_gr(w, r, n):
    """The comparison verdict as a report dict.

    ``separated`` is True when no singular top dominates a semistable
    bottom, i.e. semistable points avoid the singular locus.
    """
    w = gr.check_indexset(w, r, n)
    sing = e_sing_gr(w, r, n)
    ss = e_ss_gr(w, r, n)
    bad_pairs = [
        (a, b)
        for a in sing
        for b in ss["elements"]
        if gr.indexset_leq(b, a)
    ]
    return {
        "e_sing": sing,
        "e_ss": ss["elements"],
        "pairs": bad_pairs,
        "separated": not bad_pairs,
        "semistable_nonempty": bool(ss["elements"]),
        "warnings": ss["warnings"],
    }


def gr_cross_verdicts(w, r, n):
    """All available formulations of the criterion for one column set.

    Returns a dict of named booleans that must coincide; callers (and the
    verification suites) assert the coincidence rather than trust it.
    Raises when X_w has no semistable points at all.
    """
    report = semistable_meets_singular_gr(w, r, n)
    if not report["semistable_nonempty"]:
        raise ValueError(f"X_{w} has no semistable points")
    v = gr.minimal_semistable(r, n)
    lam_w = gr.indexset_to_partition(w, r, n)
    lam_v = gr.indexset_to_partition(v, r, n)
    out = {
        "pair-comparison": report["separated"],
        "diagram": gr.semistable_in_smooth(w, r, n),
        "component-containment": not any(
            gr.diagram_leq(mu, lam_v)
            for mu in gr.singular_components(lam_w, r, n)
        ),
        "gap-inequality": all(
            w[i - 1] < v[i]
            for i in range(1, r)
            if w[i] > w[i - 1] + 1
        ),
    }
    model = minuscule_model("A", n - 1, r)
    w_node = model.poset.node_of_indexset(w)
    v_node = model.poset.node_of_indexset(v)
    out["quiver"] = model.semistable_in_smooth(w_node, v_node)
    return out


_models: dict = {}


def minuscule_model(family, rank, weight) -> qv.MinusculeModel:
    """Cached quiver models (they are used by several suites)."""
    key = (family, rank, weight)
    if key not in _models:
        _models[key] = qv.MinusculeModel(root_system(family, rank), weight)
    return _models[key]


def minuscule_minimal_v_node(model: qv.MinusculeModel):
    """The minimal semistable element as a poset node."""
    word = qv.minimal_v_word(
        model.system.family, model.system.rank, model.weight_index
    )
    if not model.poset.word_descends(word):
        raise AssertionError("minimal element word is not reduced")
    return model.poset.node_from_word(word)


def minuscule_report(family, rank, weight, w_node) -> dict:
    """Quiver-side verdict for any minuscule pair (works beyond type A)."""
    model = minuscule_model(family, rank, weight)
    v_node = minuscule_minimal_v_node(model)
    holes = model.holes(w_node)
    components = model.singular_components(w_node)
    if not model.leq_nodes(v_node, w_node):
        verdict = None
    else:
        verdict = model.semistable_in_smooth(w_node, v_node)
    return {
        "smooth": model.is_smooth(w_node),
        "holes": holes,
        "singular_components": components,
        "minimal_v": v_node,
        "semistable_nonempty": model.leq_nodes(v_node, w_node),
        "separated": verdict,
    }
