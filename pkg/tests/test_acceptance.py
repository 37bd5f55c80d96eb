"""Exit criteria, one test per criterion; a pass/fail line per criterion is
printed in the terminal summary."""
import json
import random
import time
from fractions import Fraction

import numpy as np
import pytest

import catalog_oracle
from mtcheck.checks import (
    fs_indicators,
    fusion_tensor,
    galois_suite,
    genus_dimension,
    congruence_test,
    projective_kernel_profile,
    replay_witness,
    run_all,
    seifert_invariant,
    trace_identity_S,
)
from mtcheck.cli import main
from mtcheck.controls import MUTATIONS, mutate
from mtcheck.cycmat import CycMatrix, apply_galois_mat, classify
from mtcheck.cyclotomic import CycNumber, euler_phi, lift_unit, units
from mtcheck.modular_data import CATALOG_NAMES, CheckConfig, catalog
from mtcheck.sl2z import GenWord, decompose, evaluate, random_element
from mtcheck.verdicts import Status

POSITIVITY_TOL = 1e-9
FLOAT_TOL = 1e-9
CFG = CheckConfig(genus_max=5, samples=100, seed=0, positivity_tolerance=POSITIVITY_TOL)


@pytest.fixture
def criterion(record_property):
    def mark(text):
        record_property("criterion", text)

    return mark


def test_ac01_catalog_soundness(criterion, capsys):
    criterion("AC1: catalog soundness, verify passes on all four entries")
    for name in CATALOG_NAMES:
        S, T = catalog_oracle.float_data(name)
        md = catalog(name)
        assert np.allclose(np.array(md.s.to_complex()), S, atol=1e-12)
        assert np.allclose(np.array(md.t_matrix().to_complex()), T, atol=1e-12)
        code = main(["verify", f"@{name}", "--tolerance", str(POSITIVITY_TOL), "--no-timing"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0 and doc["overall"] == "pass"
        assert not [c for c in doc["checks"] if c["status"] in ("fail", "undecided")]


def test_ac02_fusion_integrality(criterion):
    criterion("AC2: fusion coefficients are non-negative integers; semion/fibonacci values")
    for name in CATALOG_NAMES:
        N, v = fusion_tensor(catalog(name))
        assert v.passed
        F = catalog_oracle.verlinde(name)
        exact = np.array([[[float(x) for x in row] for row in plane] for plane in N])
        assert np.max(np.abs(F - exact)) < FLOAT_TOL
        assert all(x.denominator == 1 and x >= 0 for plane in N for row in plane for x in row)
    N, _ = fusion_tensor(catalog("semion"))
    assert N[1][1][0] == 1 and N[1][1][1] == 0
    N, _ = fusion_tensor(catalog("fibonacci"))
    assert N[1][1][1] == 1


def test_ac03_frobenius_schur(criterion):
    criterion("AC3: Frobenius-Schur indicators in {-1,0,1}; Ising gives (1,1,1)")
    for name in CATALOG_NAMES:
        nu, v = fs_indicators(catalog(name))
        assert v.passed and all(x in (-1, 0, 1) for x in nu)
        assert np.allclose(np.array(nu, dtype=float), catalog_oracle.fs_indicators(name), atol=FLOAT_TOL)
    assert fs_indicators(catalog("ising"))[0] == [1, 1, 1]


def test_ac04_galois_suite(criterion):
    criterion("AC4: G_l signed permutations, sigma_l(S)=S G_l, G_l G_m=G_lm, G_l^-1 T G_l=T^(l^2)")
    for name in CATALOG_NAMES:
        md = catalog(name)
        res = galois_suite(md, CFG)
        us = units(md.conductor)
        assert len(us) <= 16 and set(res.entries) == set(us)
        assert all(v.passed for v in res.verdicts), [v for v in res.verdicts if not v.passed]
        law = next(v for v in res.verdicts if v.check_name == "galois_group_law")
        assert law.witness["exhaustive"] and law.witness["pairs"] == len(us) ** 2
        N = md.conductor
        for l, ent in res.entries.items():
            g = ent.matrix
            assert classify(g).is_signed_permutation
            assert apply_galois_mat(md.s, lift_unit(l, N, md.root_order)) == md.s @ g
            assert g.transpose() @ md.t_matrix() @ g == md.t_matrix(l * l)
            for m, other in res.entries.items():
                assert g @ other.matrix == res.entries[(l * m) % N if N > 1 else 1].matrix


def test_ac05_congruence(criterion):
    criterion("AC5: rho(A)=rho(B) for 100 sampled A=B mod N (seed 0); rho(T^N)=1")
    for name in CATALOG_NAMES:
        md = catalog(name)
        v = congruence_test(md, CFG)
        assert v.passed and v.witness["samples"] == 100 and v.witness["seed"] == 0
        assert evaluate(GenWord((("T", md.conductor),)), md) == CycMatrix.identity(md.rank, md.root_order)


def test_ac06_projective_kernel(criterion):
    criterion("AC6: (K,e) = (1,1),(4,6),(5,12),(16,3); e|12; h of exponent 2; Gamma(K,h) scalar")
    expected = {"trivial": (1, 1), "semion": (4, 6), "fibonacci": (5, 12), "ising": (16, 3)}
    for name, (K, e) in expected.items():
        prof = projective_kernel_profile(catalog(name), CFG)
        assert (prof.K, prof.e) == (K, e)
        assert K == catalog_oracle.projective_order(name)
        assert 12 % prof.e == 0
        assert all((l * l) % K == 1 % K for l in prof.h)
        assert prof.gamma_kh_sampled_ok
        sampled = next(v for v in prof.verdicts if v.check_name == "gamma_kh_in_kernel")
        assert sampled.passed and sampled.witness["samples"] == 100


def test_ac07_verlinde_dimensions(criterion):
    criterion("AC7: dim V_0 = 1, dim V_1 = rank, fibonacci g=2 -> 5, ising g=2 -> 10, integers to g=5")
    for name in CATALOG_NAMES:
        md = catalog(name)
        assert genus_dimension(md, 0)[0] == 1
        assert genus_dimension(md, 1)[0] == md.rank
        for g in range(6):
            value, v = genus_dimension(md, g)
            assert v.passed and v.witness["dim"] > 0
            assert abs(v.witness["dim"] - catalog_oracle.genus_dimension(name, g)) < 1e-6 * v.witness["dim"]
    assert genus_dimension(catalog("fibonacci"), 2)[0] == 5
    assert genus_dimension(catalog("ising"), 2)[0] == 10


def test_ac08_trace_identity(criterion):
    criterion("AC8: S-trace identity holds exactly; Tr S = 0 (semion), 1 (ising)")
    for name in CATALOG_NAMES:
        assert trace_identity_S(catalog(name)).passed
    assert trace_identity_S(catalog("semion")).witness["trace"]["terms"] == []
    assert trace_identity_S(catalog("ising")).witness["trace"]["terms"] == [[1, 1, 0]]


def test_ac09_seifert(criterion):
    criterion("AC9: Seifert(g; S) = dim V_g and Seifert(g; 1) = S_00^(1-2g), g = 1..3")
    for name in CATALOG_NAMES:
        md = catalog(name)
        for g in (1, 2, 3):
            assert seifert_invariant(md, g, [GenWord.parse("S")]) == genus_dimension(md, g)[0]
            assert seifert_invariant(md, g, [GenWord()]) == md.s[0, 0] ** (1 - 2 * g)


def test_ac10_negative_controls(criterion):
    criterion("AC10: all 10 documented Ising mutations fail with replayable witnesses")
    assert len(MUTATIONS) == 10
    for name in MUTATIONS:
        md = mutate(name)
        rep = run_all(md, CFG)
        assert rep.overall == "fail", name
        fails = [v for v in rep.checks if v.status is Status.FAIL]
        assert fails, name
        for v in fails:
            assert replay_witness(md, v), (name, v.check_name)


def test_ac11_core_properties(criterion):
    criterion("AC11: 1000 decomposition round trips, 200 homomorphism pairs per datum, 1000 field-axiom triples")
    t0 = time.perf_counter()
    rng = random.Random(0)
    for _ in range(1000):
        A = random_element(rng, 10**6)
        assert decompose(A).to_matrix() == A
    for name in CATALOG_NAMES:
        md = catalog(name)
        for _ in range(200):
            A, B = random_element(rng, 10**6), random_element(rng, 10**6)
            assert evaluate(A @ B, md) == evaluate(A, md) @ evaluate(B, md)
    assert time.perf_counter() - t0 <= 60.0
    orders = [1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24]

    def rand_elem(m):
        return CycNumber(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(euler_phi(m))])

    for _ in range(1000):
        m = rng.choice(orders)
        a, b, c = rand_elem(m), rand_elem(m), rand_elem(m)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1
