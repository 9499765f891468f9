"""Machine-checkable verification suite.

Runs every structural identity the library promises — closed operator
forms, eigenvalue multisets, shift classifications, coassociativity,
the quantum-plane morphism property, star/shift duality, Gram
diagnostics, antilinearity, and projection coherence — and returns one
record per check.  The truncated bounded-degree coalgebra genuinely
fails coassociativity; those records carry status ``expected-fail``
together with the exact witnesses, and the suite counts them as
healthy.

All randomized checks derive their generators from a single seed, so a
report is reproducible byte for byte (timings excluded).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    DividedKey,
    Element,
    ManinKey,
    MatrixKey,
    NegDegKey,
    ProjectionPair,
    TensorElement,
    comul_extend,
    pi_action,
)
from .engine import (
    Classification,
    OperatorHandle,
    check_coassociativity,
    classify_shift,
    co_toeplitz_apply,
    compose_apply,
    diagonal_eigenvalues,
    gram_matrix,
    is_positive_definite,
    make_window,
    operator_matrix,
    verify_antilinearity,
)
from .instances import (
    DividedPower,
    FormSpec,
    ManinPlane,
    MatrixCoalgebra,
    NegativeDegree,
    make_form,
    manin_product,
)
from .parsing import parse_weight, render_element, render_triple
from .scalars import GaussianRational, ONE, ZERO

DEFAULT_Q = GaussianRational(Fraction(2, 3))
DEFAULT_WEIGHT = "one"
SCOPES = ("all", "manin", "divpow", "negdeg", "matrix")


# ---------------------------------------------------------------------------
# report structure
# ---------------------------------------------------------------------------

@dataclass
class CheckRecord:
    check: str
    coalgebra: str
    form: str
    parameters: dict
    status: str  # "pass" | "fail" | "expected-fail"
    witness: str | None
    elapsed: float

    def sort_key(self):
        return (
            self.check,
            self.coalgebra,
            self.form,
            tuple(sorted(self.parameters.items())),
        )

    def params_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "coalgebra": self.coalgebra,
            "form": self.form,
            "parameters": dict(sorted(self.parameters.items())),
            "status": self.status,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
        }


@dataclass
class VerificationReport:
    scope: str
    seed: int
    records: list

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "expected-fail": 0, "fail": 0}
        for record in self.records:
            out[record.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "seed": self.seed,
            "defaults": {"q": str(DEFAULT_Q), "weight": DEFAULT_WEIGHT},
            "records": [record.to_json() for record in self.records],
            "summary": self.counts,
        }

    def to_text(self) -> str:
        lines = [
            "verification report",
            f"scope: {self.scope}",
            f"seed: {self.seed}",
            f"defaults: q={DEFAULT_Q} weight={DEFAULT_WEIGHT}",
        ]
        for record in self.records:
            line = f"[{record.status}] {record.check} coalgebra={record.coalgebra}"
            if record.form:
                line += f" form={record.form}"
            params = record.params_text()
            if params:
                line += f" {params}"
            if record.witness:
                line += f" witness: {record.witness}"
            lines.append(line)
        counts = self.counts
        lines.append(
            "summary: pass={pass} expected-fail={expected-fail} fail={fail}".format(
                **counts
            )
        )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# random generators (seeded, reproducible)
# ---------------------------------------------------------------------------

def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_fraction(rng: random.Random, height: int = 10) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_scalar(rng: random.Random, height: int = 10) -> GaussianRational:
    return GaussianRational(random_fraction(rng, height), random_fraction(rng, height))


def random_nonzero_scalar(rng: random.Random, height: int = 10) -> GaussianRational:
    while True:
        value = random_scalar(rng, height)
        if value:
            return value


def random_element(rng, coalgebra, keys, n_terms: int = 3, height: int = 10) -> Element:
    """Random combination of up to n_terms distinct window keys with
    nonzero coefficients of bounded height."""
    count = min(n_terms, len(keys))
    chosen = rng.sample(list(keys), count) if count else []
    return Element(
        coalgebra, {key: random_nonzero_scalar(rng, height) for key in chosen}
    )


def probe_elements(rng, coalgebra, window, extra: int = 20) -> list:
    """All window basis vectors plus a few random 3-term elements."""
    probes = [Element.basis(coalgebra, key) for key in window.keys]
    probes.extend(
        random_element(rng, coalgebra, window.keys) for _ in range(extra)
    )
    return probes


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def normal_order_word(word: str, q: GaussianRational):
    """Brute-force normal ordering of a word in {a, c} by repeatedly
    rewriting 'ca' -> q^{-1} 'ac'; returns (coefficient, normal monomial).

    Independent of the closed-form product: the coefficient comes out as
    one inverse power of q per executed swap.
    """
    letters = list(word)
    coeff = ONE
    changed = True
    while changed:
        changed = False
        for idx in range(len(letters) - 1):
            if letters[idx] == "c" and letters[idx + 1] == "a":
                letters[idx], letters[idx + 1] = "a", "c"
                coeff = coeff * q.inverse()
                changed = True
                break
    return coeff, ManinKey(letters.count("a"), letters.count("c"))


def negdeg_triple_difference_oracle(M: int, n: int) -> dict:
    """Exact difference of the two triple expansions of x_n in the
    bounded-degree coalgebra, by direct enumeration.

    A triple (p, q, r) with p+q+r = n and all entries in range appears in
    the left-first expansion iff the intermediate index p+q is in range,
    and in the right-first expansion iff q+r is; the difference is the
    set of triples where exactly one of the two conditions holds.
    """
    diff = {}
    for p in range(-M, M + 1):
        for q_ in range(-M, M + 1):
            r = n - p - q_
            if abs(r) > M:
                continue
            c = int(abs(p + q_) <= M) - int(abs(q_ + r) <= M)
            if c:
                diff[(p, q_, r)] = c
    return diff


def manin_tensor_product(coalgebra: ManinPlane, t1: TensorElement, t2: TensorElement):
    """Componentwise normal-ordered product of two tensors over the
    quantum plane; used only by the morphism diagnostic."""
    q = coalgebra.q
    pairs = []
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            ca, ka = manin_product(a1, a2, q)
            cb, kb = manin_product(b1, b2, q)
            pairs.append(((ka, kb), c1 * c2 * ca * cb))
    return TensorElement(coalgebra, pairs)


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _mismatch(label: str, got, expected) -> tuple:
    return "fail", f"{label}: got {got}, expected {expected}"


def _check_closed_form_divpow(weight_spec: str):
    def fn():
        coalgebra = DividedPower()
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("diag", w), coalgebra)
        for k in range(26):
            handle = OperatorHandle(Element.basis(coalgebra, DividedKey(k)), form)
            for n in range(26):
                got = co_toeplitz_apply(handle, Element.basis(coalgebra, DividedKey(n)))
                if k <= n:
                    expected = Element(
                        coalgebra, {DividedKey(n - k): GaussianRational(w(k))}
                    )
                else:
                    expected = Element.zero(coalgebra)
                if got != expected:
                    return _mismatch(
                        f"image of x_{n} under the x_{k} operator",
                        render_element(got),
                        render_element(expected),
                    )
        return "pass", None

    return fn


def _check_closed_form_negdeg(weight_spec: str, M: int = 5):
    def fn():
        coalgebra = NegativeDegree(M)
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("diag", w), coalgebra)
        for k in range(-M, M + 1):
            handle = OperatorHandle(Element.basis(coalgebra, NegDegKey(k)), form)
            for n in range(-M, M + 1):
                got = co_toeplitz_apply(handle, Element.basis(coalgebra, NegDegKey(n)))
                if abs(n - k) <= M:
                    expected = Element(
                        coalgebra, {NegDegKey(n - k): GaussianRational(w(k))}
                    )
                else:
                    expected = Element.zero(coalgebra)
                if got != expected:
                    return _mismatch(
                        f"image of x_{n} under the x_{k} operator",
                        render_element(got),
                        render_element(expected),
                    )
        return "pass", None

    return fn


def _manin_monomials(max_degree: int) -> list:
    return ManinPlane().window_keys(max_degree)


def _check_closed_form_manin_orth(weight_spec: str, max_degree: int = 8):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-orth", w), coalgebra)
        monomials = _manin_monomials(max_degree)
        for symbol in monomials:
            handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
            for key in monomials:
                got = co_toeplitz_apply(handle, Element.basis(coalgebra, key))
                if symbol.j == 0 and symbol.i == key.i + key.j:
                    expected = Element(
                        coalgebra,
                        {key: GaussianRational(w(symbol.i, symbol.j))},
                    )
                else:
                    expected = Element.zero(coalgebra)
                if got != expected:
                    return _mismatch(
                        f"image of {key.text()} under the {symbol.text()} operator",
                        render_element(got),
                        render_element(expected),
                    )
        return "pass", None

    return fn


def _check_closed_form_manin_skew(weight_spec: str, max_degree: int = 6):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        mu = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-skew", mu), coalgebra)
        monomials = _manin_monomials(max_degree)
        for symbol in monomials:
            handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
            for key in monomials:
                got = co_toeplitz_apply(handle, Element.basis(coalgebra, key))
                if symbol.i - symbol.j == key.i + key.j:
                    expected = Element(
                        coalgebra,
                        {key: GaussianRational(mu(symbol.i, symbol.j, key.i + key.j, 0))},
                    )
                else:
                    expected = Element.zero(coalgebra)
                if got != expected:
                    return _mismatch(
                        f"image of {key.text()} under the {symbol.text()} operator",
                        render_element(got),
                        render_element(expected),
                    )
        return "pass", None

    return fn


def _check_closed_form_matrix_orth(max_n: int = 6):
    def fn():
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-orth"), coalgebra)
            units = coalgebra.window_keys()
            for symbol in units:
                handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
                for key in units:
                    got = co_toeplitz_apply(handle, Element.basis(coalgebra, key))
                    if symbol.j == key.j:
                        expected = Element.basis(coalgebra, MatrixKey(key.i, symbol.i))
                    else:
                        expected = Element.zero(coalgebra)
                    if got != expected:
                        return _mismatch(
                            f"n={n}: image of {key.text()} under {symbol.text()}",
                            render_element(got),
                            render_element(expected),
                        )
        return "pass", None

    return fn


def _check_closed_form_matrix_weighted(weight_spec: str, max_n: int = 6):
    def fn():
        w = parse_weight(weight_spec)
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-weighted", w), coalgebra)
            units = coalgebra.window_keys()
            for symbol in units:
                handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
                r, s = symbol.i, symbol.j
                for key in units:
                    got = co_toeplitz_apply(handle, Element.basis(coalgebra, key))
                    target = key.j + r - s
                    if 1 <= target <= n:
                        expected = Element(
                            coalgebra,
                            {MatrixKey(key.i, target): GaussianRational(w(r + key.j))},
                        )
                    else:
                        expected = Element.zero(coalgebra)
                    if got != expected:
                        return _mismatch(
                            f"n={n}: image of {key.text()} under {symbol.text()}",
                            render_element(got),
                            render_element(expected),
                        )
        return "pass", None

    return fn


def _check_eigenvalues_manin_orth(weight_spec: str, max_degree: int = 8):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        w = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-orth", w), coalgebra)
        window = make_window(coalgebra, max_degree)
        size = len(window)
        for i in range(max_degree + 1):
            handle = OperatorHandle(
                Element.basis(coalgebra, ManinKey(i, 0)), form
            )
            got = diagonal_eigenvalues(operator_matrix(handle, window))
            value = GaussianRational(w(i, 0))
            expected = sorted(
                [(ZERO, size - (i + 1)), (value, i + 1)],
                key=lambda kv: (kv[0].re, kv[0].im),
            )
            if got != expected:
                return _mismatch(f"eigenvalues of the a^{i} operator", got, expected)
        return "pass", None

    return fn


def _check_eigenvalues_manin_skew(weight_spec: str, max_degree: int = 6):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        mu = parse_weight(weight_spec)
        form = make_form(FormSpec("manin-skew", mu), coalgebra)
        window = make_window(coalgebra, max_degree)
        size = len(window)
        for symbol in _manin_monomials(max_degree):
            handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
            got = diagonal_eigenvalues(operator_matrix(handle, window))
            d = symbol.i - symbol.j
            if d < 0:
                expected = [(ZERO, size)]
            else:
                value = GaussianRational(mu(symbol.i, symbol.j, d, 0))
                expected = sorted(
                    [(ZERO, size - (d + 1)), (value, d + 1)],
                    key=lambda kv: (kv[0].re, kv[0].im),
                )
            if got != expected:
                return _mismatch(
                    f"eigenvalues of the {symbol.text()} operator", got, expected
                )
        return "pass", None

    return fn


def _check_classification_divpow(weight_spec: str, max_k: int = 8, max_degree: int = 12):
    def fn():
        coalgebra = DividedPower()
        form = make_form(FormSpec("diag", parse_weight(weight_spec)), coalgebra)
        window = make_window(coalgebra, max_degree)
        for k in range(max_k + 1):
            handle = OperatorHandle(Element.basis(coalgebra, DividedKey(k)), form)
            got = classify_shift(handle, window)
            expected = (
                Classification.preservation()
                if k == 0
                else Classification.annihilation(k)
            )
            if got != expected:
                return _mismatch(f"class of the x_{k} operator", got, expected)
        return "pass", None

    return fn


def _check_classification_negdeg(weight_spec: str, M: int = 5):
    def fn():
        coalgebra = NegativeDegree(M)
        form = make_form(FormSpec("diag", parse_weight(weight_spec)), coalgebra)
        window = make_window(coalgebra)
        for k in range(-M, M + 1):
            handle = OperatorHandle(Element.basis(coalgebra, NegDegKey(k)), form)
            got = classify_shift(handle, window)
            if k < 0:
                expected = Classification.creation(-k)
            elif k > 0:
                expected = Classification.annihilation(k)
            else:
                expected = Classification.preservation()
            if got != expected:
                return _mismatch(f"class of the x_{k} operator", got, expected)
        return "pass", None

    return fn


def _check_classification_matrix(weight_spec: str, max_n: int = 6):
    def fn():
        w = parse_weight(weight_spec)
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-weighted", w), coalgebra)
            window = make_window(coalgebra)
            for symbol in coalgebra.window_keys():
                handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
                got = classify_shift(handle, window)
                d = symbol.i - symbol.j
                if d > 0:
                    expected = Classification.creation(d)
                elif d < 0:
                    expected = Classification.annihilation(-d)
                else:
                    expected = Classification.preservation()
                if got != expected:
                    return _mismatch(
                        f"n={n}: class of the {symbol.text()} operator", got, expected
                    )
        return "pass", None

    return fn


def _check_classification_manin(weight_spec: str, max_degree: int = 8):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        form = make_form(FormSpec("manin-orth", parse_weight(weight_spec)), coalgebra)
        window = make_window(coalgebra, max_degree)
        for symbol in _manin_monomials(max_degree):
            handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
            got = classify_shift(handle, window)
            expected = (
                Classification.preservation()
                if symbol.j == 0
                else Classification.zero()
            )
            if got != expected:
                return _mismatch(
                    f"class of the {symbol.text()} operator", got, expected
                )
        return "pass", None

    return fn


def _check_coassociativity_holds(make_coalgebra, max_degree=None):
    def fn():
        coalgebra = make_coalgebra()
        report = check_coassociativity(coalgebra, make_window(coalgebra, max_degree))
        if report.failures:
            key, difference = report.first_failure
            return "fail", f"{key.text()} : {render_triple(difference)}"
        return "pass", None

    return fn


def _check_coassociativity_matrix(max_n: int = 6):
    def fn():
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            report = check_coassociativity(coalgebra, make_window(coalgebra))
            if report.failures:
                key, difference = report.first_failure
                return "fail", f"n={n}: {key.text()} : {render_triple(difference)}"
        return "pass", None

    return fn


def _check_coassociativity_negdeg(M: int):
    def fn():
        coalgebra = NegativeDegree(M)
        report = check_coassociativity(coalgebra, make_window(coalgebra))
        if not report.failures:
            return "fail", "coassociativity unexpectedly holds"
        failing = set()
        for key, difference in report.failures:
            failing.add(key.n)
            got = {
                (k[0].n, k[1].n, k[2].n): coeff for k, coeff in difference.items()
            }
            expected = negdeg_triple_difference_oracle(M, key.n)
            if got != expected:
                return (
                    "fail",
                    f"difference for {key.text()} disagrees with the enumeration oracle",
                )
        for n in range(-M, M + 1):
            oracle_fails = bool(negdeg_triple_difference_oracle(M, n))
            if oracle_fails != (n in failing):
                return "fail", f"oracle and diagnostic disagree on x_{n}"
        witness = "; ".join(
            f"{key.text()} : {render_triple(difference)}"
            for key, difference in report.failures
        )
        return "expected-fail", witness

    return fn


def _check_delta_morphism(max_degree: int = 5):
    def fn():
        coalgebra = ManinPlane(DEFAULT_Q)
        q = coalgebra.q
        monomials = _manin_monomials(max_degree)
        for u in monomials:
            for v in monomials:
                coeff, key = manin_product(u, v, q)
                word = "a" * u.i + "c" * u.j + "a" * v.i + "c" * v.j
                oracle_coeff, oracle_key = normal_order_word(word, q)
                if coeff != oracle_coeff or key != oracle_key:
                    return (
                        "fail",
                        f"product {u.text()} * {v.text()} disagrees with the "
                        f"string-rewriting oracle",
                    )
                lhs = coalgebra.comul(key) * coeff
                rhs = manin_tensor_product(coalgebra, coalgebra.comul(u), coalgebra.comul(v))
                if lhs != rhs:
                    return (
                        "fail",
                        f"comultiplication is not multiplicative on {u.text()} * {v.text()}",
                    )
        # a c = q c a, hence Delta(ac) = q Delta(ca).
        ca_coeff, ca_key = manin_product(ManinKey(0, 1), ManinKey(1, 0), q)
        lhs = coalgebra.comul(ManinKey(1, 1))
        rhs = coalgebra.comul(ca_key) * (ca_coeff * q)
        if lhs != rhs:
            return "fail", "Delta(ac) != q Delta(ca)"
        return "pass", None

    return fn


def _check_star_duality_negdeg(M: int = 5):
    def fn():
        coalgebra = NegativeDegree(M)
        form = make_form(FormSpec("diag", parse_weight("one")), coalgebra)
        window = make_window(coalgebra)
        for k in range(-M, M + 1):
            key = NegDegKey(k)
            direct = classify_shift(
                OperatorHandle(Element.basis(coalgebra, key), form), window
            )
            starred = classify_shift(
                OperatorHandle(
                    Element.basis(coalgebra, coalgebra.star_key(key)), form
                ),
                window,
            )
            if direct.shift is None or starred.shift != -direct.shift:
                return _mismatch(f"shift duality at x_{k}", starred, direct)
        return "pass", None

    return fn


def _check_star_duality_matrix(n: int = 4):
    def fn():
        coalgebra = MatrixCoalgebra(n)
        form = make_form(FormSpec("matrix-weighted", parse_weight("one")), coalgebra)
        window = make_window(coalgebra)
        for key in coalgebra.window_keys():
            direct = classify_shift(
                OperatorHandle(Element.basis(coalgebra, key), form), window
            )
            starred = classify_shift(
                OperatorHandle(
                    Element.basis(coalgebra, coalgebra.star_key(key)), form
                ),
                window,
            )
            if direct.shift is None or starred.shift != -direct.shift:
                return _mismatch(f"shift duality at {key.text()}", starred, direct)
        return "pass", None

    return fn


def _check_gram(make_coalgebra, form_kind, weight_spec, max_degree, expect_pd):
    def fn():
        coalgebra = make_coalgebra()
        weight = parse_weight(weight_spec) if weight_spec else None
        form = make_form(FormSpec(form_kind, weight), coalgebra)
        window = make_window(coalgebra, max_degree)
        gram = gram_matrix(form, window)
        if not gram.hermitian:
            return "fail", "Gram matrix is not hermitian"
        verdict = is_positive_definite(gram.entries)
        if verdict != expect_pd:
            return _mismatch("positive definiteness", verdict, expect_pd)
        return "pass", None

    return fn


def _check_hermitian_pairs_matrix_weighted(weight_spec: str, max_n: int = 6):
    def fn():
        w = parse_weight(weight_spec)
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-weighted", w), coalgebra)
            keys = coalgebra.window_keys()
            for b1 in keys:
                for b2 in keys:
                    if form.pair_basis(b1, b2) != form.pair_basis(b2, b1).conjugate():
                        return (
                            "fail",
                            f"n={n}: pairing not hermitian at ({b1.text()}, {b2.text()})",
                        )
        return "pass", None

    return fn


def _check_comul_terms(kind: str):
    def fn():
        if kind == "divpow":
            coalgebra = DividedPower()
            for n in range(26):
                count = len(coalgebra.comul(DividedKey(n)))
                if count != n + 1:
                    return _mismatch(f"term count of Delta(x_{n})", count, n + 1)
        elif kind == "negdeg":
            for M in range(1, 6):
                coalgebra = NegativeDegree(M)
                for n in range(-M, M + 1):
                    count = len(coalgebra.comul(NegDegKey(n)))
                    if count != 2 * M + 1 - abs(n):
                        return _mismatch(
                            f"M={M}: term count of Delta(x_{n})",
                            count,
                            2 * M + 1 - abs(n),
                        )
        else:  # matrix
            for n in range(1, 7):
                coalgebra = MatrixCoalgebra(n)
                for key in coalgebra.window_keys():
                    count = len(coalgebra.comul(key))
                    if count != n:
                        return _mismatch(
                            f"term count of Delta({key.text()})", count, n
                        )
        return "pass", None

    return fn


def _check_form_delta(make_coalgebra, form_kind, weight_spec, max_degree):
    def _condition(form_kind, b1, b2):
        if form_kind == "manin-orth":
            return b1.i == b2.i and b1.j == b2.j
        if form_kind == "manin-skew":
            return b1.i - b1.j == b2.i - b2.j
        if form_kind == "diag":
            return b1.n == b2.n
        if form_kind == "matrix-orth":
            return b1 == b2
        return b1.i - b1.j == b2.i - b2.j

    def fn():
        coalgebra = make_coalgebra()
        weight = parse_weight(weight_spec) if weight_spec else None
        form = make_form(FormSpec(form_kind, weight), coalgebra)
        keys = coalgebra.window_keys(max_degree)
        for b1 in keys:
            for b2 in keys:
                value = form.pair_basis(b1, b2)
                if _condition(form_kind, b1, b2):
                    if not value:
                        return (
                            "fail",
                            f"pairing vanishes on matched pair ({b1.text()}, {b2.text()})",
                        )
                elif value:
                    return (
                        "fail",
                        f"delta constraint violated at ({b1.text()}, {b2.text()})",
                    )
        return "pass", None

    return fn


def _check_antilinearity(make_coalgebra, form_kind, weight_spec, max_degree, label, seed, trials=100):
    def fn():
        coalgebra = make_coalgebra()
        weight = parse_weight(weight_spec) if weight_spec else None
        form = make_form(FormSpec(form_kind, weight), coalgebra)
        window = make_window(coalgebra, max_degree)
        rng = _rng(seed, label)
        probes = [Element.basis(coalgebra, key) for key in window.keys]
        for _ in range(trials):
            alpha = random_scalar(rng)
            g = random_element(rng, coalgebra, window.keys)
            h = random_element(rng, coalgebra, window.keys)
            counterexample = verify_antilinearity(coalgebra, form, g, h, alpha, probes)
            if counterexample is not None:
                probe, lhs, rhs = counterexample
                return (
                    "fail",
                    f"probe {render_element(probe)}: {render_element(lhs)} != "
                    f"{render_element(rhs)}",
                )
        return "pass", None

    return fn


def _check_projection(make_coalgebra, form_kind, weight_spec, max_degree, label, seed, trials=20):
    def fn():
        coalgebra = make_coalgebra()
        weight = parse_weight(weight_spec) if weight_spec else None
        form = make_form(FormSpec(form_kind, weight), coalgebra)
        window = make_window(coalgebra, max_degree)
        rng = _rng(seed, label)
        for _ in range(trials):
            size = rng.randint(0, len(window))
            subset = rng.sample(list(window.keys), size)
            pair = ProjectionPair(coalgebra, subset)
            inside = random_element(rng, coalgebra, subset) if subset else Element.zero(coalgebra)
            if pair.project(pair.include(inside)) != inside:
                return "fail", "Q . j is not the identity on the subspace"
            anywhere = random_element(rng, coalgebra, window.keys)
            once = pair.project(anywhere)
            if pair.project(once) != once:
                return "fail", "projection is not idempotent"
        for _ in range(trials):
            g = random_element(rng, coalgebra, window.keys)
            phi = random_element(rng, coalgebra, window.keys)
            handle = OperatorHandle(g, form)
            via_pipeline = co_toeplitz_apply(handle, phi)
            direct = pi_action(form, g, comul_extend(coalgebra, phi))
            if render_element(via_pipeline) != render_element(direct):
                return "fail", "full-basis pipeline text differs from the simple case"
            if json.dumps(via_pipeline.to_json()) != json.dumps(direct.to_json()):
                return "fail", "full-basis pipeline JSON differs from the simple case"
        return "pass", None

    return fn


def _check_composition_matrix_orth(max_n: int = 6):
    def fn():
        for n in range(1, max_n + 1):
            coalgebra = MatrixCoalgebra(n)
            form = make_form(FormSpec("matrix-orth"), coalgebra)
            units = coalgebra.window_keys()
            images = {}
            for symbol in units:
                handle = OperatorHandle(Element.basis(coalgebra, symbol), form)
                images[symbol] = {
                    key: co_toeplitz_apply(handle, Element.basis(coalgebra, key))
                    for key in units
                }

            def apply_from_table(symbol, element):
                out = Element.zero(coalgebra)
                for key, coeff in element.items():
                    out = out + images[symbol][key] * coeff
                return out

            for first in units:
                for second in units:
                    matched = first.j == second.i
                    for key in units:
                        composed = apply_from_table(first, images[second][key])
                        expected = (
                            images[MatrixKey(first.i, second.j)][key]
                            if matched
                            else Element.zero(coalgebra)
                        )
                        if composed != expected:
                            return (
                                "fail",
                                f"n={n}: composition rule fails at "
                                f"({first.text()}, {second.text()}) on {key.text()}",
                            )
        return "pass", None

    return fn


def _check_commutation_divpow(weight_spec: str, bound: int = 12):
    def fn():
        coalgebra = DividedPower()
        form = make_form(FormSpec("diag", parse_weight(weight_spec)), coalgebra)
        handles = {
            k: OperatorHandle(Element.basis(coalgebra, DividedKey(k)), form)
            for k in range(bound + 1)
        }
        for k in range(bound + 1):
            for l in range(k, bound + 1):
                for n in range(bound + 1):
                    phi = Element.basis(coalgebra, DividedKey(n))
                    one_way = compose_apply([handles[k], handles[l]], phi)
                    other_way = compose_apply([handles[l], handles[k]], phi)
                    if one_way != other_way:
                        return (
                            "fail",
                            f"operators for x_{k} and x_{l} do not commute on x_{n}",
                        )
        return "pass", None

    return fn


# ---------------------------------------------------------------------------
# suite assembly
# ---------------------------------------------------------------------------

def _default_manin() -> ManinPlane:
    return ManinPlane(DEFAULT_Q)


def _checks(seed: int) -> list:
    """Full list of (check, coalgebra, form, parameters, fn)."""
    manin = _default_manin
    divpow = DividedPower
    entries = []

    # closed forms
    for w in ("one", "factorial", "geom:1/2"):
        entries.append(
            ("closed-form", "divpow", f"diag?w={w}", {"max_index": "25"},
             _check_closed_form_divpow(w))
        )
    for w in ("one", "geom:1/3", "absfactorial"):
        entries.append(
            ("closed-form", "negdeg", f"diag?w={w}", {"M": "5"},
             _check_closed_form_negdeg(w))
        )
    for w in ("one", "geom:1/2", "factorial"):
        entries.append(
            ("closed-form", "manin", f"manin-orth?w={w}", {"window": "deg<=8"},
             _check_closed_form_manin_orth(w))
        )
    for mu in ("one", "poly:2"):
        entries.append(
            ("closed-form", "manin", f"manin-skew?mu={mu}", {"window": "deg<=6"},
             _check_closed_form_manin_skew(mu))
        )
    entries.append(
        ("closed-form", "matrix", "matrix-orth", {"max_n": "6"},
         _check_closed_form_matrix_orth())
    )
    for w in ("one", "geom:2"):
        entries.append(
            ("closed-form", "matrix", f"matrix-weighted?w={w}", {"max_n": "6"},
             _check_closed_form_matrix_weighted(w))
        )

    # eigenvalue multisets of diagonal operators
    for w in ("one", "geom:1/2"):
        entries.append(
            ("eigenvalues", "manin", f"manin-orth?w={w}", {"window": "deg<=8"},
             _check_eigenvalues_manin_orth(w))
        )
    for mu in ("one", "poly:2"):
        entries.append(
            ("eigenvalues", "manin", f"manin-skew?mu={mu}", {"window": "deg<=6"},
             _check_eigenvalues_manin_skew(mu))
        )

    # shift classification
    entries.append(
        ("classification", "divpow", "diag?w=factorial",
         {"max_k": "8", "window": "deg<=12"}, _check_classification_divpow("factorial"))
    )
    for w in ("one", "geom:1/3", "absfactorial"):
        entries.append(
            ("classification", "negdeg", f"diag?w={w}", {"M": "5"},
             _check_classification_negdeg(w))
        )
    for w in ("one", "geom:2"):
        entries.append(
            ("classification", "matrix", f"matrix-weighted?w={w}", {"max_n": "6"},
             _check_classification_matrix(w))
        )
    entries.append(
        ("classification", "manin", "manin-orth?w=one", {"window": "deg<=8"},
         _check_classification_manin("one"))
    )

    # coassociativity
    entries.append(
        ("coassociativity", "manin", "", {"window": "deg<=8"},
         _check_coassociativity_holds(manin, 8))
    )
    entries.append(
        ("coassociativity", "divpow", "", {"window": "deg<=25"},
         _check_coassociativity_holds(divpow, 25))
    )
    entries.append(
        ("coassociativity", "matrix", "", {"max_n": "6"},
         _check_coassociativity_matrix())
    )
    for M in (1, 2, 3):
        entries.append(
            ("coassociativity", "negdeg", "", {"M": str(M)},
             _check_coassociativity_negdeg(M))
        )

    # morphism property of the quantum-plane comultiplication
    entries.append(
        ("delta-morphism", "manin", "", {"max_degree": "5", "q": str(DEFAULT_Q)},
         _check_delta_morphism())
    )

    # star/shift duality
    entries.append(
        ("star-duality", "negdeg", "diag?w=one", {"M": "5"},
         _check_star_duality_negdeg())
    )
    entries.append(
        ("star-duality", "matrix", "matrix-weighted?w=one", {"n": "4"},
         _check_star_duality_matrix())
    )

    # Gram diagnostics
    for w in ("one", "factorial", "geom:1/2"):
        entries.append(
            ("gram", "divpow", f"diag?w={w}", {"window": "deg<=6", "expect": "pd"},
             _check_gram(divpow, "diag", w, 6, True))
        )
    for w in ("one", "geom:1/3", "absfactorial"):
        entries.append(
            ("gram", "negdeg", f"diag?w={w}", {"M": "5", "expect": "pd"},
             _check_gram(lambda: NegativeDegree(5), "diag", w, None, True))
        )
    for w in ("one", "geom:1/2"):
        entries.append(
            ("gram", "manin", f"manin-orth?w={w}", {"window": "deg<=4", "expect": "pd"},
             _check_gram(manin, "manin-orth", w, 4, True))
        )
    entries.append(
        ("gram", "matrix", "matrix-orth", {"n": "4", "expect": "pd"},
         _check_gram(lambda: MatrixCoalgebra(4), "matrix-orth", None, None, True))
    )
    entries.append(
        ("gram", "manin", "manin-skew?mu=one", {"window": "deg<=2", "expect": "not-pd"},
         _check_gram(manin, "manin-skew", "one", 2, False))
    )

    # hermiticity of the weighted matrix pairing
    entries.append(
        ("hermitian-pairs", "matrix", "matrix-weighted?w=geom:2", {"max_n": "6"},
         _check_hermitian_pairs_matrix_weighted("geom:2"))
    )

    # comultiplication term counts
    entries.append(("comul-terms", "divpow", "", {"max_index": "25"},
                    _check_comul_terms("divpow")))
    entries.append(("comul-terms", "negdeg", "", {"M": "1..5"},
                    _check_comul_terms("negdeg")))
    entries.append(("comul-terms", "matrix", "", {"max_n": "6"},
                    _check_comul_terms("matrix")))

    # Kronecker-delta constraints of the pairings
    entries.append(
        ("form-delta", "manin", "manin-orth?w=geom:1/2", {"window": "deg<=5"},
         _check_form_delta(manin, "manin-orth", "geom:1/2", 5))
    )
    entries.append(
        ("form-delta", "manin", "manin-skew?mu=poly:1", {"window": "deg<=5"},
         _check_form_delta(manin, "manin-skew", "poly:1", 5))
    )
    entries.append(
        ("form-delta", "divpow", "diag?w=factorial", {"window": "deg<=10"},
         _check_form_delta(divpow, "diag", "factorial", 10))
    )
    entries.append(
        ("form-delta", "negdeg", "diag?w=absfactorial", {"M": "4"},
         _check_form_delta(lambda: NegativeDegree(4), "diag", "absfactorial", None))
    )
    entries.append(
        ("form-delta", "matrix", "matrix-orth", {"n": "4"},
         _check_form_delta(lambda: MatrixCoalgebra(4), "matrix-orth", None, None))
    )
    entries.append(
        ("form-delta", "matrix", "matrix-weighted?w=geom:2", {"n": "4"},
         _check_form_delta(lambda: MatrixCoalgebra(4), "matrix-weighted", "geom:2", None))
    )

    # antilinearity of the symbol-to-operator map
    entries.append(
        ("antilinearity", "manin", "manin-orth?w=one",
         {"window": "deg<=4", "trials": "100"},
         _check_antilinearity(manin, "manin-orth", "one", 4, "antilinearity:manin", seed))
    )
    entries.append(
        ("antilinearity", "divpow", "diag?w=factorial",
         {"window": "deg<=10", "trials": "100"},
         _check_antilinearity(divpow, "diag", "factorial", 10, "antilinearity:divpow", seed))
    )
    entries.append(
        ("antilinearity", "negdeg", "diag?w=one", {"M": "3", "trials": "100"},
         _check_antilinearity(lambda: NegativeDegree(3), "diag", "one", None,
                              "antilinearity:negdeg", seed))
    )
    entries.append(
        ("antilinearity", "matrix", "matrix-orth", {"n": "3", "trials": "100"},
         _check_antilinearity(lambda: MatrixCoalgebra(3), "matrix-orth", None, None,
                              "antilinearity:matrix", seed))
    )

    # projection coherence
    entries.append(
        ("projection", "manin", "manin-orth?w=one",
         {"window": "deg<=4", "subsets": "20"},
         _check_projection(manin, "manin-orth", "one", 4, "projection:manin", seed))
    )
    entries.append(
        ("projection", "divpow", "diag?w=one", {"window": "deg<=8", "subsets": "20"},
         _check_projection(divpow, "diag", "one", 8, "projection:divpow", seed))
    )
    entries.append(
        ("projection", "negdeg", "diag?w=one", {"M": "3", "subsets": "20"},
         _check_projection(lambda: NegativeDegree(3), "diag", "one", None,
                           "projection:negdeg", seed))
    )
    entries.append(
        ("projection", "matrix", "matrix-orth", {"n": "3", "subsets": "20"},
         _check_projection(lambda: MatrixCoalgebra(3), "matrix-orth", None, None,
                           "projection:matrix", seed))
    )

    # operator composition and commutation
    entries.append(
        ("composition", "matrix", "matrix-orth", {"max_n": "6"},
         _check_composition_matrix_orth())
    )
    entries.append(
        ("commutation", "divpow", "diag?w=geom:1/2", {"bound": "12"},
         _check_commutation_divpow("geom:1/2"))
    )

    return entries


def run_suite(scope: str = "all", seed: int = 0) -> VerificationReport:
    """Run the verification suite and return the canonical report."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope '{scope}'")
    records = []
    for check, coalgebra_name, form_spec, parameters, fn in _checks(seed):
        if scope != "all" and coalgebra_name != scope:
            continue
        started = time.perf_counter()
        status, witness = fn()
        elapsed = time.perf_counter() - started
        records.append(
            CheckRecord(check, coalgebra_name, form_spec, parameters, status, witness, elapsed)
        )
    records.sort(key=CheckRecord.sort_key)
    return VerificationReport(scope, seed, records)
