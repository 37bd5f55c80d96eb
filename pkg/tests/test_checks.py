import itertools
import json
from fractions import Fraction

import numpy as np
import pytest

import catalog_oracle
from mtcheck.checks import (
    CORE_AXIOMS,
    check_axioms,
    congruence_test,
    fs_indicators,
    fusion_tensor,
    galois_matrix,
    galois_suite,
    genus_dimension,
    projective_kernel_profile,
    replay_witness,
    run_all,
    seifert_invariant,
    trace_identity_S,
)
from mtcheck.controls import MUTATIONS, mutate
from mtcheck.cycmat import CycMatrix, apply_galois_mat, classify
from mtcheck.cyclotomic import CycNumber, units
from mtcheck.modular_data import CATALOG_NAMES, CheckConfig, ModularData, catalog
from mtcheck.sl2z import GenWord, SL2Elem, evaluate
from mtcheck.verdicts import Status


def statuses(verdicts):
    return {v.check_name: v.status for v in verdicts}


# axioms


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_axioms_pass_on_catalog(name):
    vs = check_axioms(catalog(name))
    assert len(vs) == 5
    assert all(v.status is Status.PASS for v in vs)


def test_negated_vacuum_entry_fails_positivity():
    md = catalog("ising")
    bad = md.with_s(md.s.replace(0, 1, -md.s[0, 1]).replace(1, 0, -md.s[1, 0]))
    v = statuses(check_axioms(bad))
    assert v["vacuum_row_positive"] is Status.FAIL
    w = next(x for x in check_axioms(bad) if x.check_name == "vacuum_row_positive").witness
    assert w["entry"] == [0, 1] and w["state"] == "negative"


def test_tiny_vacuum_entry_is_undecided():
    md = ModularData("tiny", 1, 1, (0,), CycMatrix([[Fraction(1, 10**12)]]))
    v = next(x for x in check_axioms(md) if x.check_name == "vacuum_row_positive")
    assert v.status is Status.UNDECIDED
    # a looser tolerance than the entry itself decides nothing either way
    v = next(x for x in check_axioms(md, CheckConfig(positivity_tolerance=1e-15))
             if x.check_name == "vacuum_row_positive")
    assert v.status is Status.PASS


def test_positive_row_elsewhere_is_reported():
    # swap the vacuum label of Ising with psi: row 2 is the positive one
    md = catalog("ising")
    perm = [2, 1, 0]
    rows = [[md.s[perm[i], perm[j]] for j in range(3)] for i in range(3)]
    # negate so that row 0 (old psi) has a negative entry while row 2 stays positive
    swapped = md.with_s(CycMatrix(rows, md.root_order)).with_t([md.t_exponents[p] for p in perm])
    v = next(x for x in check_axioms(swapped) if x.check_name == "vacuum_row_positive")
    assert v.status is Status.FAIL
    assert v.witness["positive_rows"] == [2]


# fusion


def test_fusion_examples():
    N, v = fusion_tensor(catalog("trivial"))
    assert N == [[[1]]] and v.passed
    N, v = fusion_tensor(catalog("semion"))
    assert v.passed and N[1][1][0] == 1 and N[1][1][1] == 0
    N, v = fusion_tensor(catalog("fibonacci"))
    assert v.passed and N[1][1][1] == 1


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_fusion_matches_float_verlinde(name):
    N, _ = fusion_tensor(catalog(name))
    F = catalog_oracle.verlinde(name)
    assert np.max(np.abs(F - np.round(F.real))) < 1e-9
    assert np.array(N, dtype=float).tolist() == np.round(F.real).tolist()


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_fusion_symmetric_under_permutations(name):
    N, _ = fusion_tensor(catalog(name))
    r = len(N)
    for p, q, s in itertools.product(range(r), repeat=3):
        for a, b, c in itertools.permutations((p, q, s)):
            assert N[a][b][c] == N[p][q][s]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_vacuum_fusion_is_charge_conjugation(name):
    md = catalog(name)
    N, _ = fusion_tensor(md)
    perm = classify(md.charge_conjugation).signed_permutation[0]
    for q in range(md.rank):
        for r in range(md.rank):
            assert N[0][q][r] in (0, 1)
            assert (N[0][q][r] == 1) == (perm[q] == r)


def test_zero_vacuum_column_is_failure():
    md = ModularData("z", 2, 1, (0, 0), CycMatrix([[1, 0], [0, 1]]))
    _, v = fusion_tensor(md)
    assert v.status is Status.FAIL and v.witness["entry"] == [0, 1]


# Frobenius-Schur


def test_fs_examples():
    assert fs_indicators(catalog("trivial"))[0] == [1]
    nu, v = fs_indicators(catalog("ising"))
    assert nu == [1, 1, 1] and v.passed


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_fs_matches_float(name):
    nu, v = fs_indicators(catalog(name))
    assert v.passed
    assert np.allclose(np.array(nu, dtype=float), catalog_oracle.fs_indicators(name), atol=1e-9)


def test_fs_skipped_when_axioms_broken():
    md = catalog("ising")
    rep = run_all(md.with_s(md.s * 2))
    assert rep.verdict("fs_indicators").status is Status.SKIP
    assert "dependency failed" in rep.verdict("fs_indicators").witness["reason"]


# Galois


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_galois_suite_passes(name):
    res = galois_suite(catalog(name))
    assert all(v.passed for v in res.verdicts)
    assert set(res.entries) == set(units(res.conductor))


def test_galois_trivial():
    res = galois_suite(catalog("trivial"))
    assert list(res.entries) == [1] and res.entries[1].matrix == CycMatrix([[1]])


def test_semion_galois_by_direct_comparison():
    md = catalog("semion")
    res = galois_suite(md)
    assert sorted(res.entries) == [1, 5, 7, 11, 13, 17, 19, 23]
    for l, ent in res.entries.items():
        # oracle: elementwise sigma_l on S, compared to S G_l
        assert apply_galois_mat(md.s, l) == md.s @ ent.matrix


def test_galois_perturbed_s_fails():
    md = catalog("ising")
    bad = md.with_s(md.s.replace(2, 2, md.s[2, 2] + 1))
    res = galois_suite(bad)
    v = next(x for x in res.verdicts if x.check_name == "galois_s_action")
    assert v.status is Status.FAIL
    assert "l" in v.witness and "entry" in v.witness
    assert replay_witness(bad, v)


@pytest.mark.parametrize("name", ["semion", "fibonacci", "ising"])
def test_galois_permutations_form_group_action(name):
    res = galois_suite(catalog(name))
    N = res.conductor
    perms = {l: e.signed_permutation[0] for l, e in res.entries.items()}
    for a, b in itertools.product(perms, repeat=2):
        ab = (a * b) % N
        # G_a G_b = G_ab: column q of G_b lands in perm_b[q], then perm_a
        assert tuple(perms[a][perms[b][q]] for q in range(len(perms[a]))) == perms[ab]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_galois_on_t_is_power(name):
    md = catalog(name)
    for l in units(md.conductor):
        from mtcheck.cyclotomic import lift_unit

        L = lift_unit(l, md.conductor, md.root_order)
        assert apply_galois_mat(md.t_matrix(), L) == md.t_matrix(l)


# congruence and projective kernel


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_congruence_passes(name):
    v = congruence_test(catalog(name), CheckConfig(samples=20))
    assert v.passed and v.witness["seed"] == 0


def test_semion_t_to_conductor_is_identity():
    md = catalog("semion")
    assert evaluate(GenWord((("T", 24),)), md) == CycMatrix.identity(2, 24)


def test_wrong_twists_gate_congruence():
    md = catalog("ising")
    rep = run_all(md.with_t([0, 24, 24]), CheckConfig(samples=10))
    assert rep.verdict("modular_relation").status is Status.FAIL
    assert rep.verdict("congruence_kernel").status is Status.SKIP


@pytest.mark.parametrize("name, K, e", [("trivial", 1, 1), ("semion", 4, 6), ("fibonacci", 5, 12), ("ising", 16, 3)])
def test_projective_profile(name, K, e):
    prof = projective_kernel_profile(catalog(name), CheckConfig(samples=20))
    assert (prof.K, prof.e) == (K, e)
    assert prof.K == catalog_oracle.projective_order(name)
    assert 12 % prof.e == 0 and prof.parity_constraints_ok
    assert all((l * l) % K == 1 % K for l in prof.h)
    assert prof.gamma_kh_sampled_ok
    assert all(v.passed for v in prof.verdicts)


def test_trivial_profile_h():
    prof = projective_kernel_profile(catalog("trivial"), CheckConfig(samples=5))
    assert prof.h == (1,)


# dimensions, Seifert, trace


def test_genus_examples(md):
    assert genus_dimension(md, 1)[0] == md.rank
    assert genus_dimension(md, 0)[0] == 1


@pytest.mark.parametrize("name, g, dim", [("fibonacci", 2, 5), ("ising", 2, 10)])
def test_genus_two(name, g, dim):
    value, v = genus_dimension(catalog(name), g)
    assert value == dim and v.passed
    assert abs(catalog_oracle.genus_dimension(name, g) - dim) < 1e-9


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_genus_positive_integers_to_five(name):
    for g in range(6):
        value, v = genus_dimension(catalog(name), g)
        assert v.passed
        assert abs(complex(value) - catalog_oracle.genus_dimension(name, g)) < 1e-6 * abs(complex(value))


def test_seifert_trivial():
    md = catalog("trivial")
    assert seifert_invariant(md, 2, [GenWord.parse("S T^5"), SL2Elem(2, 1, 1, 1)]) == 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_seifert_identity_and_s(md, g):
    assert seifert_invariant(md, g, [GenWord()]) == md.s[0, 0] ** (1 - 2 * g)
    assert seifert_invariant(md, g, [GenWord.parse("S")]) == genus_dimension(md, g)[0]
    assert seifert_invariant(md, g, [SL2Elem(0, -1, 1, 0)]) == genus_dimension(md, g)[0]


def test_seifert_rejects_empty():
    with pytest.raises(ValueError):
        seifert_invariant(catalog("ising"), 1, [])
    with pytest.raises(ValueError):
        seifert_invariant(catalog("ising"), 0, [GenWord()])


@pytest.mark.parametrize("name, trace", [("trivial", 1), ("semion", 0), ("fibonacci", 0), ("ising", 1)])
def test_trace_identity(name, trace):
    v = trace_identity_S(catalog(name))
    assert v.passed
    lhs, rhs = catalog_oracle.trace_identity(name)
    assert abs(lhs - rhs) < 1e-9 and abs(rhs - trace) < 1e-9
    assert v.witness["trace"]["terms"] == ([[trace, 1, 0]] if trace else [])


# pipeline


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_run_all_catalog(name):
    rep = run_all(catalog(name))
    assert rep.overall == "pass"
    assert not rep.failures()


def test_run_all_sigma_sigma_one():
    md = catalog("ising")
    rep = run_all(md.with_s(md.s.replace(1, 1, 1)))
    assert rep.overall == "fail"
    failed = {v.check_name for v in rep.failures()}
    assert failed & {"fusion_integrality", "s_symmetric", "s_fourth_power"}


def test_checks_filter_includes_dependencies():
    rep = run_all(catalog("semion"), CheckConfig(checks=("gamma_kh_in_kernel",), samples=5))
    names = [v.check_name for v in rep.checks]
    assert names[:5] == list(CORE_AXIOMS) + ["vacuum_row_positive"]
    assert "galois_monomial" in names and "gamma_kh_in_kernel" in names
    assert "fusion_integrality" not in names
    with pytest.raises(ValueError):
        run_all(catalog("semion"), CheckConfig(checks=("nonsense",)))


def test_report_deterministic_without_timing():
    a = run_all(catalog("fibonacci"), CheckConfig(samples=10, seed=3)).to_json(timing=False)
    b = run_all(catalog("fibonacci"), CheckConfig(samples=10, seed=3)).to_json(timing=False)
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"name", "overall", "conductor", "profile", "checks"}
    assert set(doc["profile"]) == {"K", "e", "h", "galois_current_candidate"}


@pytest.mark.parametrize("mutation", sorted(MUTATIONS))
def test_mutations_fail_with_replayable_witness(mutation):
    md = mutate(mutation)
    rep = run_all(md, CheckConfig(samples=10))
    assert rep.overall == "fail"
    for v in rep.failures():
        assert replay_witness(md, v), v.check_name


def test_replay_rejects_passing_verdict():
    rep = run_all(catalog("semion"), CheckConfig(samples=5))
    assert not any(replay_witness(catalog("semion"), v) for v in rep.checks)
