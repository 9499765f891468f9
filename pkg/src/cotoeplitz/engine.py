"""Operator construction and diagnostics.

An operator handle binds a symbol g to a coalgebra, a sesquilinear form,
and an inclusion/projection pair.  Applying it to phi computes

    pi_g . (Q (x) id) . Delta . j (phi),

where the coordinate projection acts on the first tensor slot; with the
full-basis projection this reduces to pi_g . Delta.  Matrices on finite
basis windows report out-of-window components as leakage instead of
silently truncating them, and classification by uniform degree shift
inspects leakage terms too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import (
    Coalgebra,
    Element,
    ProjectionPair,
    SesquilinearForm,
    TripleTensorElement,
    comul_extend,
    pi_action,
)
from .errors import (
    ContextMismatch,
    InvalidParameter,
    NoDegree,
    NotDiagonal,
    NotHermitian,
)
from .scalars import ONE, ZERO, GaussianRational


# ---------------------------------------------------------------------------
# basis windows
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BasisWindow:
    """Finite ordered slice of a basis, in graded-lexicographic order."""

    coalgebra: Coalgebra
    keys: tuple
    label: str
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(set(self.keys)) != len(self.keys):
            raise InvalidParameter("window keys must be distinct")
        self._index.update({key: pos for pos, key in enumerate(self.keys)})

    def __len__(self):
        return len(self.keys)

    def position(self, key) -> Optional[int]:
        return self._index.get(key)

    def key_texts(self) -> list:
        return [key.text() for key in self.keys]


def make_window(coalgebra: Coalgebra, max_degree: int | None = None) -> BasisWindow:
    """Window of all basis keys, or of those with degree <= max_degree."""
    keys = tuple(coalgebra.window_keys(max_degree))
    label = "full" if max_degree is None else f"deg<={max_degree}"
    return BasisWindow(coalgebra, keys, label)


# ---------------------------------------------------------------------------
# operator handles
# ---------------------------------------------------------------------------

class OperatorHandle:
    """A symbol bound to a coalgebra, a form, and a projection pair."""

    __slots__ = ("symbol", "coalgebra", "form", "projection")

    def __init__(
        self,
        symbol: Element,
        form: SesquilinearForm,
        projection: ProjectionPair | None = None,
    ):
        coalgebra = symbol.coalgebra
        if form.coalgebra != coalgebra:
            raise ContextMismatch("symbol and form live in different coalgebras")
        if projection is None:
            projection = ProjectionPair.full(coalgebra)
        elif projection.coalgebra != coalgebra:
            raise ContextMismatch("projection lives in a different coalgebra")
        self.symbol = symbol
        self.coalgebra = coalgebra
        self.form = form
        self.projection = projection

    def __repr__(self):
        return f"<operator symbol={self.symbol!r} form={self.form.spec}>"


def co_toeplitz_apply(handle: OperatorHandle, phi: Element) -> Element:
    """Apply the operator to an element of the projection subspace."""
    coalgebra = handle.coalgebra
    if phi.coalgebra != coalgebra:
        raise ContextMismatch("argument does not belong to the operator's coalgebra")
    phi = handle.projection.include(phi)
    tensor = comul_extend(coalgebra, phi)
    if not handle.projection.is_full():
        tensor = tensor.restrict_first(handle.projection.contains)
    return pi_action(handle.form, handle.symbol, tensor)


def compose_apply(handles: Sequence[OperatorHandle], phi: Element) -> Element:
    """Apply a list of operators right to left; the empty list is the identity."""
    for handle in handles:
        if handle.coalgebra != phi.coalgebra:
            raise ContextMismatch("all handles must share the argument's coalgebra")
    out = phi
    for handle in reversed(handles):
        out = co_toeplitz_apply(handle, out)
    return out


# ---------------------------------------------------------------------------
# matrices and leakage
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixResult:
    """Exact matrix of an operator on a window.

    ``entries[r][c]`` is the coefficient of ``window.keys[r]`` in the image
    of ``window.keys[c]``; components outside the window are listed per
    source key in ``leakage``.
    """

    window: BasisWindow
    entries: tuple
    leakage: tuple

    def to_json(self) -> dict:
        return {
            "window": self.window.key_texts(),
            "entries": [[v.to_json() for v in row] for row in self.entries],
            "leakage": [
                {"from": source.text(), "escaped": escaped.to_json()}
                for source, escaped in self.leakage
            ],
        }


def operator_matrix(handle: OperatorHandle, window: BasisWindow) -> MatrixResult:
    if window.coalgebra != handle.coalgebra:
        raise ContextMismatch("window does not belong to the operator's coalgebra")
    size = len(window)
    columns = []
    leakage = []
    for key in window.keys:
        image = co_toeplitz_apply(handle, Element.basis(handle.coalgebra, key))
        column = [ZERO] * size
        escaped = {}
        for out_key, coeff in image.items():
            pos = window.position(out_key)
            if pos is None:
                escaped[out_key] = coeff
            else:
                column[pos] = coeff
        if escaped:
            leakage.append((key, Element(handle.coalgebra, escaped)))
        columns.append(column)
    entries = tuple(
        tuple(columns[c][r] for c in range(size)) for r in range(size)
    )
    return MatrixResult(window, entries, tuple(leakage))


# ---------------------------------------------------------------------------
# classification by degree shift
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    """Uniform degree-shift classification of an operator on a window.

    ``shift`` is the signed uniform shift for the homogeneous kinds;
    ``shifts`` records the observed shift set when it is mixed.
    """

    kind: str
    shift: int | None = None
    shifts: tuple = ()

    @classmethod
    def zero(cls):
        return cls("zero")

    @classmethod
    def preservation(cls):
        return cls("preservation", 0)

    @classmethod
    def creation(cls, magnitude: int):
        return cls("creation", magnitude)

    @classmethod
    def annihilation(cls, magnitude: int):
        return cls("annihilation", -magnitude)

    @classmethod
    def inhomogeneous(cls, shifts):
        return cls("inhomogeneous", None, tuple(sorted(shifts)))

    @property
    def magnitude(self) -> int | None:
        return None if self.shift is None else abs(self.shift)

    def text(self) -> str:
        if self.kind == "zero":
            return "zero"
        if self.kind == "preservation":
            return "preservation (degree 0)"
        if self.kind == "creation":
            return f"creation (degree +{self.shift})"
        if self.kind == "annihilation":
            return f"annihilation (degree {self.shift})"
        shifts = ",".join(f"{s:+d}" for s in self.shifts)
        return f"inhomogeneous (degrees {shifts})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "shift": self.shift,
            "shifts": list(self.shifts),
        }


def classify_shift(handle: OperatorHandle, window: BasisWindow) -> Classification:
    """Collect output-minus-input degree shifts over all nonzero transitions
    from window keys, leakage included; classification is relative to the
    window."""
    coalgebra = handle.coalgebra
    if not coalgebra.has_degree:
        raise NoDegree(f"{coalgebra.spec} has no degree grading")
    if window.coalgebra != coalgebra:
        raise ContextMismatch("window does not belong to the operator's coalgebra")
    shifts = set()
    for key in window.keys:
        image = co_toeplitz_apply(handle, Element.basis(coalgebra, key))
        d = coalgebra.degree(key)
        for out_key in image.support():
            shifts.add(coalgebra.degree(out_key) - d)
    if not shifts:
        return Classification.zero()
    if shifts == {0}:
        return Classification.preservation()
    if len(shifts) == 1:
        (s,) = shifts
        return Classification.creation(s) if s > 0 else Classification.annihilation(-s)
    return Classification.inhomogeneous(shifts)


# ---------------------------------------------------------------------------
# Gram matrices and positive definiteness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GramResult:
    """Matrix of the pairing on a window plus an exact hermiticity flag."""

    window: BasisWindow
    entries: tuple
    hermitian: bool

    def to_json(self) -> dict:
        return {
            "window": self.window.key_texts(),
            "entries": [[v.to_json() for v in row] for row in self.entries],
            "hermitian": self.hermitian,
        }


def gram_matrix(form: SesquilinearForm, window: BasisWindow) -> GramResult:
    if window.coalgebra != form.coalgebra:
        raise ContextMismatch("window does not belong to the form's coalgebra")
    entries = tuple(
        tuple(form.pair_basis(row, col) for col in window.keys)
        for row in window.keys
    )
    return GramResult(window, entries, _is_hermitian(entries))


def _is_hermitian(entries) -> bool:
    n = len(entries)
    return all(
        entries[r][c] == entries[c][r].conjugate()
        for r in range(n)
        for c in range(r, n)
    )


def leading_principal_minors(entries) -> list:
    """All leading principal minors, by fraction-free (Bareiss) elimination.

    Requires every leading minor except possibly the last to be nonzero;
    :func:`is_positive_definite` never hits the degenerate case because it
    stops at the first non-positive minor.
    """
    n = len(entries)
    a = [list(row) for row in entries]
    minors = []
    prev = ONE
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if k == n - 1:
            break
        if not pivot:
            raise ZeroDivisionError("zero leading minor: cannot continue elimination")
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * pivot - a[r][k] * a[k][c]) / prev
        prev = pivot
    return minors


def is_positive_definite(entries) -> bool:
    """Exact Sylvester test: all leading principal minors positive.

    The input must be a square hermitian grid of scalars; the minors of a
    hermitian matrix are real, so positivity is well defined.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise InvalidParameter("matrix must be square")
    if not _is_hermitian(entries):
        raise NotHermitian("positive definiteness is only defined for hermitian matrices")
    a = [list(row) for row in entries]
    prev = ONE
    for k in range(n):
        pivot = a[k][k]
        if pivot.im or pivot.re <= 0:
            return False
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * pivot - a[r][k] * a[k][c]) / prev
        prev = pivot
    return True


# ---------------------------------------------------------------------------
# diagonal spectra
# ---------------------------------------------------------------------------

def diagonal_eigenvalues(matrix: MatrixResult) -> list:
    """Eigenvalues with multiplicities for a matrix that is exactly diagonal
    in the window basis; anything else is an error, not an approximation."""
    if matrix.leakage:
        raise NotDiagonal("operator leaks outside the window")
    entries = matrix.entries
    n = len(entries)
    for r in range(n):
        for c in range(n):
            if r != c and entries[r][c]:
                key_r = matrix.window.keys[r].text()
                key_c = matrix.window.keys[c].text()
                raise NotDiagonal(f"off-diagonal entry at ({key_r}, {key_c})")
    counts: dict = {}
    for r in range(n):
        value = entries[r][r]
        counts[value] = counts.get(value, 0) + 1
    return sorted(counts.items(), key=lambda kv: (kv[0].re, kv[0].im))


# ---------------------------------------------------------------------------
# coassociativity diagnostic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoassociativityReport:
    """Outcome of comparing the two triple expansions on a window.

    ``failures`` lists every key whose two expansions differ, in window
    order, with the exact nonzero difference (left-first minus right-first
    expansion).
    """

    window: BasisWindow
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None


def check_coassociativity(coalgebra: Coalgebra, window: BasisWindow) -> CoassociativityReport:
    if window.coalgebra != coalgebra:
        raise ContextMismatch("window does not belong to the given coalgebra")
    failures = []
    for key in window.keys:
        tensor = coalgebra.comul(key)
        lhs: dict = {}
        rhs: dict = {}
        for (b1, b2), coeff in tensor.items():
            for (x, y), inner in coalgebra.comul(b1).items():
                triple = (x, y, b2)
                s = lhs.get(triple, ZERO) + coeff * inner
                if s:
                    lhs[triple] = s
                else:
                    lhs.pop(triple, None)
            for (x, y), inner in coalgebra.comul(b2).items():
                triple = (b1, x, y)
                s = rhs.get(triple, ZERO) + coeff * inner
                if s:
                    rhs[triple] = s
                else:
                    rhs.pop(triple, None)
        difference = TripleTensorElement(coalgebra, lhs) - TripleTensorElement(
            coalgebra, rhs
        )
        if difference:
            failures.append((key, difference))
    return CoassociativityReport(window, tuple(failures))


# ---------------------------------------------------------------------------
# antilinearity diagnostic
# ---------------------------------------------------------------------------

def verify_antilinearity(
    coalgebra: Coalgebra,
    form: SesquilinearForm,
    g: Element,
    h: Element,
    alpha: GaussianRational,
    probes: Sequence[Element],
):
    """Check C_{alpha g + h} = conj(alpha) C_g + C_h on every probe.

    Returns None when the identity holds, else (probe, lhs, rhs) for the
    first probe that breaks it.
    """
    combined = OperatorHandle(g * alpha + h, form)
    handle_g = OperatorHandle(g, form)
    handle_h = OperatorHandle(h, form)
    conj_alpha = alpha.conjugate()
    for probe in probes:
        lhs = co_toeplitz_apply(combined, probe)
        rhs = co_toeplitz_apply(handle_g, probe) * conj_alpha + co_toeplitz_apply(
            handle_h, probe
        )
        if lhs != rhs:
            return (probe, lhs, rhs)
    return None
