"""Bounded machine checks of the algebraic statements, grouped into suites.

Each check returns a :class:`~pontcalc.reports.LemmaReport`.  A pass means the
statement held for every parameter combination listed in the report, at
weights up to ``weights_checked``.
"""

from itertools import combinations_with_replacement
from math import comb

from pontcalc.bundles import (
    FormalBundle,
    direct_sum,
    dual,
    pontryagin,
    rank,
    root_var,
    top_class,
    total_class,
    verify_f_identities,
)
from pontcalc.core.polynomial import GradedPolynomial, VarSet, elementary_symmetric, series_inverse_truncated
from pontcalc.errors import ParityError
from pontcalc.ideals import (
    DEFAULT_SEARCH_BOUND,
    DEFAULT_WEIGHT_BOUND,
    J,
    L,
    Ideal,
    ideal_contains_ideal,
    ideal_degree_slice,
    minimal_k_for_Lk_in_Jn,
    minimal_s_for_LsJd_in_Jd1,
    quotient_rank_by_weight,
    verify_exact_sequence,
)
from pontcalc.reports import LemmaReport
from pontcalc.rings import bgl_pair_ring, bgl_ring, convolve, gr2_ring, gr_ring, stabilization_check
from pontcalc.segre import segre

SUITES = ("segre", "ideals", "bundles", "rings")
ROOT_POOL = ("a", "b", "c", "d")


def _fail(rep, failure, witness=None):
    rep.verdict = False
    if rep.first_failure is None:
        rep.first_failure = failure
        rep.witness = None if witness is None else str(witness)
    return rep


# -- Segre classes ---------------------------------------------------------

def check_segre_convolution(r_max=4, j_max=12):
    """sum_{i=0}^{min(j,r)} p_i s_{j-i} = [j = 0], with p_0 = 1."""
    rep = LemmaReport("segre_convolution", {"r_max": r_max, "j_max": j_max}, j_max, True)
    for r in range(r_max + 1):
        vs = VarSet.pontryagin(r)
        p = [GradedPolynomial.one(vs)] + [GradedPolynomial.var(vs, n) for n in vs.names]
        for j in range(j_max + 1):
            acc = GradedPolynomial.zero(vs)
            for i in range(min(j, r) + 1):
                acc = acc + p[i] * segre(r, j - i)
            if acc != (1 if j == 0 else 0):
                _fail(rep, {"r": r, "j": j}, acc)
    return rep


def check_segre_series(r_max=4, j_max=12):
    """segre(r, j) equals the weight-j piece of (1 + p1 + ... + pr)^(-1)."""
    rep = LemmaReport("segre_series_agreement", {"r_max": r_max, "j_max": j_max}, j_max, True)
    for r in range(r_max + 1):
        vs = VarSet.pontryagin(r)
        f = GradedPolynomial.one(vs)
        for n in vs.names:
            f = f + GradedPolynomial.var(vs, n)
        pieces = series_inverse_truncated(f, j_max)
        for j in range(-3, j_max + 1):
            s = segre(r, j)
            expected = pieces[j] if j >= 0 else GradedPolynomial.zero(vs)
            if s != expected or (s and s.weight != j):
                _fail(rep, {"r": r, "j": j}, s - expected)
    return rep


def segre_suite(max_weight=None):
    return [check_segre_convolution(), check_segre_series()]


# -- ideals J_d and L ------------------------------------------------------

def check_J_rk_in_Lk(r_max=3, k_max=3, max_weight=DEFAULT_WEIGHT_BOUND):
    rep = LemmaReport("J_rk_in_Lk", {"r_max": r_max, "k_max": k_max}, max_weight, True)
    for r in range(1, r_max + 1):
        for k in range(k_max + 1):
            res = ideal_contains_ideal(Ideal(J(r * k), r), Ideal(L() ** k, r), max_weight)
            if not res:
                _fail(rep, {"r": r, "k": k, "weight": res.first_failure}, res.witness)
    return rep


def check_Ls_Jd(r_max=3, d_max=3, max_weight=DEFAULT_WEIGHT_BOUND, search_bound=DEFAULT_SEARCH_BOUND):
    rep = LemmaReport("Ls_Jd_in_Jd1", {"r_max": r_max, "d_max": d_max, "search_bound": search_bound}, max_weight, True)
    found = {}
    for r in range(1, r_max + 1):
        for d in range(-1, d_max + 1):
            s = minimal_s_for_LsJd_in_Jd1(d, r, search_bound, max_weight)
            found["r=%d,d=%d" % (r, d)] = s
            if s is None:
                _fail(rep, {"r": r, "d": d})
    rep.details["minimal_s"] = found
    return rep


def check_Lk_Jn(r_max=3, n_max=4, max_weight=DEFAULT_WEIGHT_BOUND, search_bound=DEFAULT_SEARCH_BOUND):
    rep = LemmaReport("Lk_in_Jn", {"r_max": r_max, "n_max": n_max, "search_bound": search_bound}, max_weight, True)
    found = {}
    for r in range(1, r_max + 1):
        for n in range(-1, n_max + 1):
            k = minimal_k_for_Lk_in_Jn(n, r, search_bound, max_weight)
            found["r=%d,n=%d" % (r, n)] = k
            if k is None:
                _fail(rep, {"r": r, "n": n})
    rep.details["minimal_k"] = found
    return rep


def check_exactness(r_max=3, d_max=4, max_weight=DEFAULT_WEIGHT_BOUND):
    rep = LemmaReport("exact_sequence", {"r_max": r_max, "d_range": [0, d_max]}, max_weight, True)
    for r in range(1, r_max + 1):
        for d in range(0, d_max + 1):
            sub = verify_exact_sequence(r, d, max_weight)
            if not sub:
                _fail(rep, dict(sub.first_failure, r=r, d=d), sub.witness)
    return rep


def check_finite_generation(r_max=3, d_max=4, extra_max=3, max_weight=DEFAULT_WEIGHT_BOUND):
    """The slices of J_d built from s_d..s_{d+r-1} do not grow with more generators."""
    rep = LemmaReport("finite_generation", {"r_max": r_max, "d_max": d_max, "extra_max": extra_max}, max_weight, True)
    for r in range(1, r_max + 1):
        for d in range(1, d_max + 1):
            base = Ideal(J(d), r)
            for extra in range(1, extra_max + 1):
                more = Ideal(J(d, extra=extra), r)
                for a, b in ((base, more), (more, base)):
                    res = ideal_contains_ideal(a, b, max_weight)
                    if not res:
                        _fail(rep, {"r": r, "d": d, "extra": extra, "weight": res.first_failure}, res.witness)
    return rep


def check_monotone(r_max=3, d_max=6, max_weight=DEFAULT_WEIGHT_BOUND):
    rep = LemmaReport("J_monotone", {"r_max": r_max, "d_max": d_max}, max_weight, True)
    for r in range(1, r_max + 1):
        for d in range(-1, d_max + 1):
            res = ideal_contains_ideal(Ideal(J(d + 1), r), Ideal(J(d), r), max_weight)
            if not res:
                _fail(rep, {"r": r, "d": d, "weight": res.first_failure}, res.witness)
    return rep


def check_torsion(r_max=3, d_max=4, max_weight=DEFAULT_WEIGHT_BOUND):
    """Informational: records whether Z[p]/J_d showed torsion; never fails."""
    rep = LemmaReport("quotient_torsion_observation", {"r_max": r_max, "d_max": d_max}, max_weight, True)
    seen = []
    for r in range(1, r_max + 1):
        for d in range(1, d_max + 1):
            for w in range(max_weight + 1):
                q = quotient_rank_by_weight(r, d, w)
                if q.torsion:
                    seen.append({"r": r, "d": d, "weight": w, "torsion": list(q.torsion)})
    rep.details["torsion_observed"] = bool(seen)
    rep.details["torsion_cases"] = seen
    return rep


def ideals_suite(max_weight=DEFAULT_WEIGHT_BOUND):
    return [
        check_J_rk_in_Lk(max_weight=max_weight),
        check_Ls_Jd(max_weight=max_weight),
        check_Lk_Jn(max_weight=max_weight),
        check_exactness(max_weight=max_weight),
        check_finite_generation(max_weight=max_weight),
        check_monotone(max_weight=max_weight),
        check_torsion(max_weight=max_weight),
    ]


# -- bundle calculus -------------------------------------------------------

def bundle_corpus(max_roots=4, pool=ROOT_POOL, lines=(0, 1)):
    """All bundles with at most ``max_roots`` roots drawn (with repetition) from ``pool``."""
    out = []
    for n in range(max_roots + 1):
        for roots in combinations_with_replacement(pool, n):
            for ell in lines:
                out.append(FormalBundle(roots, ell, pool))
    return out


def check_whitney(max_roots=4, k_max=4):
    rep = LemmaReport("whitney_sum", {"max_roots": max_roots, "k_max": k_max}, None, True)
    corpus = bundle_corpus(max_roots)
    classes = {E: [pontryagin(k, E) for k in range(k_max + 1)] for E in corpus}
    pairs = 0
    for E in corpus:
        for F in corpus:
            if E.num_roots + F.num_roots > max_roots:
                continue
            pairs += 1
            S = direct_sum(E, F)
            for k in range(k_max + 1):
                rhs = GradedPolynomial.zero(E.varset)
                for i in range(k + 1):
                    rhs = rhs + classes[E][i] * classes[F][k - i]
                if pontryagin(k, S) != rhs:
                    _fail(rep, {"E": E.serialize(), "F": F.serialize(), "k": k}, pontryagin(k, S) - rhs)
    rep.details["pairs"] = pairs
    return rep


def check_sigma_formula(max_roots=4):
    rep = LemmaReport("sigma_k_formula", {"max_roots": max_roots}, None, True)
    for n in range(max_roots + 1):
        names = ROOT_POOL[:n]
        for ell in range(3):
            E = FormalBundle(names, ell, ROOT_POOL)
            for k in range(-1, n + 3):
                expected = elementary_symmetric(k, [root_var(x) for x in names], E.varset)
                if pontryagin(k, E) != expected:
                    _fail(rep, {"E": E.serialize(), "k": k})
    return rep


def check_trivial_and_lines(max_lines=6, k_max=4):
    rep = LemmaReport("trivial_bundle_vanishing", {"max_lines": max_lines, "k_max": k_max}, None, True)
    for n in range(max_lines + 1):
        E = FormalBundle.trivial(n, ROOT_POOL)
        for k in range(k_max + 1):
            if pontryagin(k, E) != (1 if k == 0 else 0):
                _fail(rep, {"lines": n, "k": k})
    for E in bundle_corpus(3):
        E1 = direct_sum(E, FormalBundle.trivial(1, ROOT_POOL))
        for k in range(k_max + 1):
            if pontryagin(k, E1) != pontryagin(k, E):
                _fail(rep, {"E": E.serialize(), "k": k, "kind": "line invariance"})
    return rep


def check_dual(max_roots=3, k_max=4):
    rep = LemmaReport("dual_invariance", {"max_roots": max_roots, "k_max": k_max}, None, True)
    for E in bundle_corpus(max_roots):
        if dual(dual(E)) != E or dual(E) != E:
            _fail(rep, {"E": E.serialize(), "kind": "involution"})
        for k in range(k_max + 1):
            if pontryagin(k, dual(E)) != pontryagin(k, E):
                _fail(rep, {"E": E.serialize(), "k": k})
    return rep


def check_top_class(max_roots=4):
    rep = LemmaReport("top_class", {"max_roots": max_roots}, None, True)
    corpus = [E for E in bundle_corpus(max_roots, lines=(0, 2)) if rank(E) % 2 == 0]
    for E in corpus:
        n = rank(E)
        if top_class(E) != pontryagin(n // 2, E):
            _fail(rep, {"E": E.serialize()})
        if E.lines and top_class(E):
            _fail(rep, {"E": E.serialize(), "kind": "odd-rank quotient vanishing"})
        for k in range(n // 2 + 1, n // 2 + 3):
            if pontryagin(k, E):
                _fail(rep, {"E": E.serialize(), "k": k, "kind": "vanishing range"})
    small = bundle_corpus(2, lines=(0, 2))
    for E in small:
        for F in small:
            if top_class(direct_sum(E, F)) != top_class(E) * top_class(F):
                _fail(rep, {"E": E.serialize(), "F": F.serialize(), "kind": "multiplicativity"})
    return rep


def check_symmetry(max_roots=3, k_max=3):
    """Relabelling two roots of E swaps their variables in every p_k."""
    rep = LemmaReport("root_symmetry", {"max_roots": max_roots, "k_max": k_max}, None, True)
    for E in bundle_corpus(max_roots, lines=(0,)):
        vs = E.varset
        for i, a in enumerate(ROOT_POOL):
            for b in ROOT_POOL[i + 1:]:
                xa, xb = root_var(a), root_var(b)
                swap = {xa: GradedPolynomial.var(vs, xb), xb: GradedPolynomial.var(vs, xa)}
                relabel = {a: b, b: a}
                F = FormalBundle([(relabel.get(n, n), m) for n, m in E.roots], E.lines, E.ambient)
                for k in range(k_max + 1):
                    if pontryagin(k, E).substitute(swap) != pontryagin(k, F):
                        _fail(rep, {"E": E.serialize(), "swap": [a, b], "k": k})
    return rep


def check_f_identities(r_max=5, max_roots=3):
    rep = LemmaReport("f_identities", {"r_max": r_max, "max_roots": max_roots}, None, True)
    for E in bundle_corpus(max_roots, pool=ROOT_POOL[:3]):
        for name in E.root_names:
            D = FormalBundle.plane(name, ROOT_POOL[:3])
            for sub in verify_f_identities(E, D, r_max):
                if not sub:
                    _fail(rep, dict(sub.first_failure, lemma=sub.lemma_id, E=E.serialize(), D=D.serialize()), sub.witness)
    return rep


def check_total_class(max_roots=3):
    rep = LemmaReport("total_class_product", {"max_roots": max_roots}, None, True)
    for E in bundle_corpus(max_roots):
        vs = E.varset
        prod = GradedPolynomial.one(vs)
        for name, m in E.roots:
            prod = prod * (1 + GradedPolynomial.var(vs, root_var(name))) ** m
        if total_class(E).polynomial != prod:
            _fail(rep, {"E": E.serialize()})
    return rep


def bundles_suite(max_weight=None):
    return [
        check_whitney(),
        check_sigma_formula(),
        check_trivial_and_lines(),
        check_dual(),
        check_top_class(),
        check_symmetry(),
        check_total_class(),
        check_f_identities(),
    ]


# -- ring presentations ----------------------------------------------------

def check_gr2(s_max=13):
    rep = LemmaReport("gr2_presentation", {"s_max": s_max}, None, True)
    for s in range(s_max + 1):
        R = gr2_ring(s)
        d = R.d
        if len(R.basis) != d or R.per_weight_ranks() != (1,) * d:
            _fail(rep, {"s": s, "kind": "basis size"})
        if not R.is_zero(R.u ** d):
            _fail(rep, {"s": s, "kind": "u^d != 0"})
        if d >= 1 and R.is_zero(R.u ** (d - 1)):
            _fail(rep, {"s": s, "kind": "u^(d-1) == 0"})
        # coherence with the general presentation under p1 <-> u
        P = gr_ring(2, s) if s >= 2 else None
        if P is not None:
            ranks = P.ring_rank().per_weight
            if tuple(ranks) != R.per_weight_ranks():
                _fail(rep, {"s": s, "kind": "gr(2,s) ranks differ"})
            p1 = GradedPolynomial.var(P.varset, "p1")
            for k in range(d):
                nf = P.normal_form(p1 ** k)
                if nf.basis != ((k,),) or nf.coords != (1,):
                    _fail(rep, {"s": s, "k": k, "kind": "p1^k not a basis element"})
            if not P.normal_form(p1 ** d).is_zero():
                _fail(rep, {"s": s, "kind": "p1^d != 0 in gr(2,s)"})
    return rep


def check_gr_4_6():
    rep = LemmaReport("gr_4_6", {"n": 4, "s": 6}, None, True)
    P = gr_ring(4, 6)
    rk = P.ring_rank()
    basis = [P.basis(w) for w in range(P.top_weight + 1)]
    if rk.total != 3 or basis != [((0, 0),), ((1, 0),), ((2, 0),)]:
        _fail(rep, {"total": rk.total, "basis": [list(b) for b in basis]})
    return rep


def check_parity(s_max=13):
    rep = LemmaReport("parity_hypothesis", {"s_max": s_max}, None, True)
    for s in range(0, s_max + 1, 2):
        for n in range(1, s + 1, 2):
            try:
                gr_ring(n, s)
            except ParityError:
                continue
            _fail(rep, {"n": n, "s": s})
    return rep


def valid_grassmannians(r_max=3, d_max=6):
    for r in range(r_max + 1):
        for d in range(r, d_max + 1):
            for n in (2 * r, 2 * r + 1):
                for s in (2 * d, 2 * d + 1):
                    if n % 2 and not s % 2:
                        continue
                    yield n, s


def check_rank_pattern(r_max=3, d_max=6):
    rep = LemmaReport("rank_pattern_binomial", {"r_max": r_max, "d_max": d_max}, None, True)
    torsion = []
    for n, s in valid_grassmannians(r_max, d_max):
        P = gr_ring(n, s)
        rk = P.ring_rank()
        if rk.torsion_observed:
            torsion.append([n, s])
            _fail(rep, {"n": n, "s": s, "kind": "torsion"})
        if rk.total != comb(P.d, P.r) or not rk.vanishes_above_top:
            _fail(rep, {"n": n, "s": s, "total": rk.total, "expected": comb(P.d, P.r)})
    rep.details["torsion_cases"] = torsion
    return rep


def check_odd_even_collapse(r_max=3, d_max=6):
    rep = LemmaReport("odd_even_collapse", {"r_max": r_max, "d_max": d_max}, None, True)
    for r in range(r_max + 1):
        for d in range(r, d_max + 1):
            a = gr_ring(2 * r + 1, 2 * d + 1).ring_rank()
            b = gr_ring(2 * r, 2 * d).ring_rank()
            if a.per_weight != b.per_weight:
                _fail(rep, {"r": r, "d": d})
    return rep


def check_quotient_classes(r_max=3, d_max=6):
    rep = LemmaReport("quotient_class_vanishing", {"r_max": r_max, "d_max": d_max}, None, True)
    for n, s in valid_grassmannians(r_max, d_max):
        P = gr_ring(n, s)
        for k in range(P.d - P.r + 1, P.d - P.r + 1 + P.r + 2):
            if not P.tautological_quotient_class(k).is_zero():
                _fail(rep, {"n": n, "s": s, "k": k})
        if P.tautological_quotient_class(0).coords != (1,):
            _fail(rep, {"n": n, "s": s, "k": 0})
    return rep


def check_bgl(r_max=2, cutoff_max=6):
    rep = LemmaReport("bgl_truncation", {"r_max": r_max, "cutoff_max": cutoff_max}, cutoff_max, True)
    for r in range(r_max + 1):
        for N in range(cutoff_max + 1):
            for n in (2 * r, 2 * r + 1):
                R = bgl_ring(n, N)
                if not R.certificate_verified():
                    _fail(rep, {"n": n, "cutoff": N, "kind": "certificate"})
                if r:
                    st = stabilization_check(r, N, range(1, N + 4))
                    if st.details["least_d"] != R.certificate:
                        _fail(rep, {"n": n, "cutoff": N, "least_d": st.details["least_d"], "d0": R.certificate})
                P = bgl_pair_ring(n, N)
                if P.per_weight_ranks != convolve(R.per_weight_ranks, R.per_weight_ranks, N):
                    _fail(rep, {"n": n, "cutoff": N, "kind": "pair convolution"})
                if not P.certificate_verified():
                    _fail(rep, {"n": n, "cutoff": N, "kind": "pair certificate"})
    return rep


def rings_suite(max_weight=None):
    return [
        check_gr2(),
        check_gr_4_6(),
        check_parity(),
        check_rank_pattern(),
        check_odd_even_collapse(),
        check_quotient_classes(),
        check_bgl(),
    ]


_RUNNERS = {
    "segre": segre_suite,
    "ideals": ideals_suite,
    "bundles": bundles_suite,
    "rings": rings_suite,
}


def run_suite(name, max_weight=DEFAULT_WEIGHT_BOUND):
    names = SUITES if name == "all" else (name,)
    reports = []
    for n in names:
        reports.extend(_RUNNERS[n](max_weight=max_weight))
    return reports
