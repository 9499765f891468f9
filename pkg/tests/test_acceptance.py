"""Acceptance suite: one test per shipped guarantee, zero tolerance.

Every expected value is either computed here by an independent oracle
(direct formula evaluation, brute-force enumeration, double application,
string rewriting) or frozen from a hand-checked derivation.  Each test
prints one line so a verbose run doubles as the acceptance report.
"""

import json
import random
from fractions import Fraction

from cotoeplitz import (
    Classification,
    DividedPower,
    Element,
    FormSpec,
    GaussianRational,
    ManinPlane,
    MatrixCoalgebra,
    NegativeDegree,
    ONE,
    OperatorHandle,
    ProjectionPair,
    TripleTensorElement,
    ZERO,
    check_coassociativity,
    classify_shift,
    co_toeplitz_apply,
    comul_extend,
    diagonal_eigenvalues,
    gram_matrix,
    is_positive_definite,
    make_form,
    make_window,
    manin_product,
    operator_matrix,
    pi_action,
    render_element,
    verify_antilinearity,
)
from cotoeplitz.core import DividedKey, ManinKey, MatrixKey, NegDegKey, TensorElement
from cotoeplitz.cli import main as cli_main
from cotoeplitz.parsing import parse_weight
from cotoeplitz.verification import (
    negdeg_triple_difference_oracle,
    normal_order_word,
    random_element,
    random_scalar,
    run_suite,
)
from golden_cases import GOLDEN_CASES, GOLDEN_DIR

Q = GaussianRational(Fraction(2, 3))


def report(number, label):
    print(f"[acceptance] criterion {number:2d} ({label}): PASS")


def basis(coalgebra, key):
    return Element.basis(coalgebra, key)


def eig_sorted(pairs):
    return sorted(pairs, key=lambda kv: (kv[0].re, kv[0].im))


def test_c01_divided_power_closed_form():
    coalgebra = DividedPower()
    checks = 0
    for weight_spec in ("one", "factorial", "geom:1/2"):
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("diag", w), coalgebra)
        for k in range(26):
            handle = OperatorHandle(basis(coalgebra, DividedKey(k)), form)
            for n in range(26):
                got = co_toeplitz_apply(handle, basis(coalgebra, DividedKey(n)))
                if k > n:
                    expected = Element.zero(coalgebra)
                else:
                    expected = Element(
                        coalgebra, {DividedKey(n - k): GaussianRational(w(k))}
                    )
                assert got == expected
                checks += 1
    assert checks == 3 * 26 * 26
    report(1, "divided-power closed form, ~2000 exact checks")


def test_c02_manin_orthogonal_zero_operators_and_eigenvalues():
    coalgebra = ManinPlane(Q)
    window = make_window(coalgebra, 8)
    size = len(window)
    assert size == 45
    for weight_spec in ("one", "geom:1/2"):
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-orth", w), coalgebra)
        for symbol in coalgebra.window_keys(8):
            handle = OperatorHandle(basis(coalgebra, symbol), form)
            if symbol.j > 0:
                for key in window.keys:
                    assert co_toeplitz_apply(handle, basis(coalgebra, key)).is_zero()
        for i in range(9):
            handle = OperatorHandle(basis(coalgebra, ManinKey(i, 0)), form)
            got = diagonal_eigenvalues(operator_matrix(handle, window))
            # degree-i monomials number i+1 inside the window
            expected = eig_sorted(
                [(GaussianRational(w(i, 0)), i + 1), (ZERO, size - (i + 1))]
            )
            assert got == expected
    report(2, "quantum-plane orthogonal form: zero operators and spectra")


def test_c03_manin_skew_eigenvalues_and_vanishing():
    coalgebra = ManinPlane(Q)
    window = make_window(coalgebra, 6)
    size = len(window)
    assert size == 28
    for weight_spec in ("one", "poly:2"):
        mu = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-skew", mu), coalgebra)
        for symbol in coalgebra.window_keys(6):
            handle = OperatorHandle(basis(coalgebra, symbol), form)
            d = symbol.i - symbol.j
            if d < 0:
                for key in window.keys:
                    assert co_toeplitz_apply(handle, basis(coalgebra, key)).is_zero()
                continue
            got = diagonal_eigenvalues(operator_matrix(handle, window))
            value = GaussianRational(mu(symbol.i, symbol.j, d, 0))
            expected = eig_sorted([(value, d + 1), (ZERO, size - (d + 1))])
            assert got == expected
    report(3, "quantum-plane skew form: spectra and i<j vanishing")


def test_c04_matrix_orthonormal_closed_form_and_composition():
    for n in range(1, 7):
        coalgebra = MatrixCoalgebra(n)
        form = make_form(FormSpec("matrix-orth"), coalgebra)
        units = coalgebra.window_keys()
        images = {}
        for symbol in units:
            handle = OperatorHandle(basis(coalgebra, symbol), form)
            images[symbol] = {
                key: co_toeplitz_apply(handle, basis(coalgebra, key)) for key in units
            }
            for key in units:
                expected = (
                    basis(coalgebra, MatrixKey(key.i, symbol.i))
                    if symbol.j == key.j
                    else Element.zero(coalgebra)
                )
                assert images[symbol][key] == expected

        def apply_table(symbol, element):
            out = Element.zero(coalgebra)
            for key, coeff in element.items():
                out = out + images[symbol][key] * coeff
            return out

        # oracle: brute-force double application vs. the index-matching rule
        for first in units:
            for second in units:
                for key in units:
                    twice = apply_table(first, images[second][key])
                    expected = (
                        images[MatrixKey(first.i, second.j)][key]
                        if first.j == second.i
                        else Element.zero(coalgebra)
                    )
                    assert twice == expected
    report(4, "matrix orthonormal closed form and composition rule, n<=6")


def test_c05_matrix_weighted_closed_form_and_classification():
    for weight_spec in ("one", "geom:2"):
        w = parse_weight(weight_spec)
        for n in range(1, 7):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-weighted", w), coalgebra)
            window = make_window(coalgebra)
            for symbol in coalgebra.window_keys():
                handle = OperatorHandle(basis(coalgebra, symbol), form)
                r, s = symbol.i, symbol.j
                for key in window.keys:
                    got = co_toeplitz_apply(handle, basis(coalgebra, key))
                    target = key.j + r - s
                    if 1 <= target <= n:
                        expected = Element(
                            coalgebra,
                            {MatrixKey(key.i, target): GaussianRational(w(r + key.j))},
                        )
                    else:
                        expected = Element.zero(coalgebra)
                    assert got == expected
                cls = classify_shift(handle, window)
                if r > s:
                    assert cls == Classification.creation(r - s)
                elif r < s:
                    assert cls == Classification.annihilation(s - r)
                else:
                    assert cls == Classification.preservation()
    report(5, "matrix weighted closed form, boundary zeros, classification")


def test_c06_negative_degree_trichotomy():
    coalgebra = NegativeDegree(5)
    window = make_window(coalgebra)
    for weight_spec in ("one", "geom:1/3", "absfactorial"):
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("diag", w), coalgebra)
        for k in range(-5, 6):
            handle = OperatorHandle(basis(coalgebra, NegDegKey(k)), form)
            cls = classify_shift(handle, window)
            if k < 0:
                assert cls == Classification.creation(-k)
            elif k > 0:
                assert cls == Classification.annihilation(k)
            else:
                assert cls == Classification.preservation()
    report(6, "bounded-degree trichotomy by sign of the symbol index")


def test_c07_antilinearity_of_the_symbol_map():
    setups = [
        (ManinPlane(Q), FormSpec("manin-orth", parse_weight("one")), 4),
        (DividedPower(), FormSpec("diag", parse_weight("factorial")), 10),
        (NegativeDegree(3), FormSpec("diag", parse_weight("one")), None),
        (MatrixCoalgebra(3), FormSpec("matrix-orth"), None),
    ]
    for coalgebra, form_spec, bound in setups:
        form = make_form(form_spec, coalgebra)
        window = make_window(coalgebra, bound)
        probes = [basis(coalgebra, key) for key in window.keys]
        rng = random.Random(f"acceptance:{coalgebra.spec}")
        for _ in range(100):
            alpha = random_scalar(rng)
            g = random_element(rng, coalgebra, window.keys)
            h = random_element(rng, coalgebra, window.keys)
            assert verify_antilinearity(coalgebra, form, g, h, alpha, probes) is None
    report(7, "antilinearity: 100 seeded triples per coalgebra, exact")


def test_c08_coassociativity_including_expected_failure():
    manin = ManinPlane(Q)
    assert check_coassociativity(manin, make_window(manin, 8)).ok
    divpow = DividedPower()
    assert check_coassociativity(divpow, make_window(divpow, 25)).ok
    for n in range(1, 7):
        coalgebra = MatrixCoalgebra(n)
        assert check_coassociativity(coalgebra, make_window(coalgebra)).ok

    for M in (1, 2, 3):
        coalgebra = NegativeDegree(M)
        rep = check_coassociativity(coalgebra, make_window(coalgebra))
        assert not rep.ok
        failing = {key.n for key, _ in rep.failures}
        for key, diff in rep.failures:
            got = {(k[0].n, k[1].n, k[2].n): c for k, c in diff.items()}
            assert got == negdeg_triple_difference_oracle(M, key.n)
        for index in range(-M, M + 1):
            assert bool(negdeg_triple_difference_oracle(M, index)) == (index in failing)

    one = NegativeDegree(1)
    rep = check_coassociativity(one, make_window(one))
    by_key = {key.n: diff for key, diff in rep.failures}
    pinned = TripleTensorElement(
        one,
        {
            (NegDegKey(-1), NegDegKey(1), NegDegKey(1)): ONE,
            (NegDegKey(1), NegDegKey(1), NegDegKey(-1)): -ONE,
        },
    )
    assert by_key[1] == pinned
    report(8, "coassociativity: three passes, truncation failure witnessed")


def test_c09_manin_comultiplication_is_multiplicative():
    coalgebra = ManinPlane(Q)
    monomials = coalgebra.window_keys(5)
    for u in monomials:
        for v in monomials:
            coeff, key = manin_product(u, v, Q)
            word = "a" * u.i + "c" * u.j + "a" * v.i + "c" * v.j
            assert (coeff, key) == normal_order_word(word, Q)
            lhs = coalgebra.comul(key) * coeff
            t1, t2 = coalgebra.comul(u), coalgebra.comul(v)
            pairs = []
            for (a1, b1), c1 in t1.items():
                for (a2, b2), c2 in t2.items():
                    ca, ka = manin_product(a1, a2, Q)
                    cb, kb = manin_product(b1, b2, Q)
                    pairs.append(((ka, kb), c1 * c2 * ca * cb))
            assert lhs == TensorElement(coalgebra, pairs)
    report(9, "normal-ordered product: comultiplication is multiplicative")


def test_c10_gram_diagnostics():
    divpow = DividedPower()
    for weight_spec in ("one", "factorial", "geom:1/2"):
        form = make_form(FormSpec("diag", parse_weight(weight_spec)), divpow)
        gram = gram_matrix(form, make_window(divpow, 6))
        assert gram.hermitian and is_positive_definite(gram.entries)

    negdeg = NegativeDegree(5)
    for weight_spec in ("one", "geom:1/3", "absfactorial"):
        form = make_form(FormSpec("diag", parse_weight(weight_spec)), negdeg)
        gram = gram_matrix(form, make_window(negdeg))
        assert gram.hermitian and is_positive_definite(gram.entries)

    manin = ManinPlane(Q)
    for weight_spec in ("one", "geom:1/2"):
        form = make_form(FormSpec("manin-orth", parse_weight(weight_spec)), manin)
        gram = gram_matrix(form, make_window(manin, 4))
        assert gram.hermitian and is_positive_definite(gram.entries)

    orth = make_form(FormSpec("matrix-orth"), MatrixCoalgebra(4))
    gram = gram_matrix(orth, make_window(MatrixCoalgebra(4)))
    assert gram.hermitian and is_positive_definite(gram.entries)

    skew = make_form(FormSpec("manin-skew", parse_weight("one")), manin)
    gram = gram_matrix(skew, make_window(manin, 2))
    assert gram.hermitian
    assert not is_positive_definite(gram.entries)
    report(10, "Gram diagnostics: positive definiteness verdicts")


def test_c11_projection_coherence():
    setups = [
        (ManinPlane(Q), FormSpec("manin-orth", parse_weight("one")), 4),
        (DividedPower(), FormSpec("diag", parse_weight("one")), 8),
        (NegativeDegree(3), FormSpec("diag", parse_weight("one")), None),
        (MatrixCoalgebra(3), FormSpec("matrix-orth"), None),
    ]
    for coalgebra, form_spec, bound in setups:
        form = make_form(form_spec, coalgebra)
        window = make_window(coalgebra, bound)
        rng = random.Random(f"acceptance-projection:{coalgebra.spec}")
        for _ in range(20):
            subset = rng.sample(list(window.keys), rng.randint(0, len(window)))
            pair = ProjectionPair(coalgebra, subset)
            inside = (
                random_element(rng, coalgebra, subset)
                if subset
                else Element.zero(coalgebra)
            )
            assert pair.project(pair.include(inside)) == inside
        for _ in range(20):
            g = random_element(rng, coalgebra, window.keys)
            phi = random_element(rng, coalgebra, window.keys)
            pipeline = co_toeplitz_apply(OperatorHandle(g, form), phi)
            simple = pi_action(form, g, comul_extend(coalgebra, phi))
            assert render_element(pipeline) == render_element(simple)
            assert json.dumps(pipeline.to_json()) == json.dumps(simple.to_json())
    report(11, "projection coherence: Q.j identity, pipeline = simple case")


def test_c12_cli_contract(capsys):
    for name, argv in GOLDEN_CASES:
        code1 = cli_main(argv)
        out1 = capsys.readouterr().out
        code2 = cli_main(argv)
        out2 = capsys.readouterr().out
        assert code1 == 0 and code2 == 0
        assert out1 == out2
        assert out1 == (GOLDEN_DIR / f"{name}.txt").read_text(encoding="utf-8")
    assert len(GOLDEN_CASES) >= 30

    code = cli_main(["verify", "--scope", "all", "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    payload = json.loads(captured.out)
    assert payload["summary"]["fail"] == 0
    statuses = {record["status"] for record in payload["records"]}
    assert statuses <= {"pass", "expected-fail"}
    with capsys.disabled():
        report(12, "CLI contract: golden suite byte-stable, verify exits 0")


def test_acceptance_suite_matches_library_report():
    # The shipped verification report must agree with the acceptance run:
    # nothing fails, and the only expected failures are the truncation ones.
    report_all = run_suite("all", seed=0)
    assert report_all.ok
    expected_fail = [r for r in report_all.records if r.status == "expected-fail"]
    assert [(r.check, r.coalgebra, r.parameters["M"]) for r in expected_fail] == [
        ("coassociativity", "negdeg", "1"),
        ("coassociativity", "negdeg", "2"),
        ("coassociativity", "negdeg", "3"),
    ]
    witness = expected_fail[0].witness
    assert "x_1 : x_-1⊗x_1⊗x_1 - x_1⊗x_1⊗x_-1" in witness
