"""Basis-indexed exact linear algebra over a distinguished coalgebra basis.

Elements are finitely supported maps from basis keys to Gaussian-rational
coefficients; tensor and triple-tensor elements use pairs and triples of
keys.  Zero coefficients are never stored, every value is immutable, and
structural equality is the universal test oracle.

The sesquilinear pairing is conjugate-linear in the FIRST slot (the symbol
slot) and linear in the second, so the symbol-to-operator map is
anti-linear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    ContextMismatch,
    KeyOutOfRange,
    NoDegree,
    NotInSubcoalgebra,
    StarUndefined,
    Unclassified,
)
from .scalars import ONE, ZERO, GaussianRational, as_scalar, coerce_scalar


# ---------------------------------------------------------------------------
# basis keys
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ManinKey:
    """Monomial a^i c^j of the quantum plane, i, j >= 0."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise KeyOutOfRange(f"a^{self.i} c^{self.j}: exponents must be >= 0")

    def text(self) -> str:
        return f"a^{self.i} c^{self.j}"


@dataclass(frozen=True)
class DividedKey:
    """Divided-power basis vector x_n, n >= 0."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise KeyOutOfRange(f"x_{self.n}: index must be >= 0")

    def text(self) -> str:
        return f"x_{self.n}"


@dataclass(frozen=True)
class NegDegKey:
    """Basis vector x_n of the bounded-degree coalgebra; |n| <= M is
    enforced by the owning coalgebra, not by the key itself."""

    n: int

    def text(self) -> str:
        return f"x_{self.n}"


@dataclass(frozen=True)
class MatrixKey:
    """Matrix unit E_{i,j}; 1 <= i, j <= n is enforced by the coalgebra."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise KeyOutOfRange(f"E_{self.i}_{self.j}: indices must be >= 1")

    def text(self) -> str:
        return f"E_{self.i}_{self.j}"


BasisKey = Union[ManinKey, DividedKey, NegDegKey, MatrixKey]


# ---------------------------------------------------------------------------
# linear combinations
# ---------------------------------------------------------------------------

class _Combination:
    """Shared machinery for finitely supported maps key -> scalar."""

    __slots__ = ("coalgebra", "_terms")

    def __init__(self, coalgebra, terms=None):
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                self._validate_key(coalgebra, key)
                c = as_scalar(coeff)
                if key in clean:
                    c = clean[key] + c
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self.coalgebra = coalgebra
        self._terms = clean

    def _validate_key(self, coalgebra, key):
        raise NotImplementedError

    def _entry_sort_key(self, key):
        raise NotImplementedError

    # -- queries ------------------------------------------------------------

    def coefficient(self, key) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def support(self):
        return frozenset(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: self._entry_sort_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coalgebra == other.coalgebra and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = ", ".join(
            f"{self._key_repr(k)}: {c}" for k, c in self.sorted_terms()
        )
        return f"{type(self).__name__}({self.coalgebra.spec}, {{{body}}})"

    def _key_repr(self, key):
        return key.text()

    # -- linear structure -----------------------------------------------------

    def _require_same_context(self, other):
        if type(other) is not type(self):
            raise ContextMismatch(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if self.coalgebra != other.coalgebra:
            raise ContextMismatch(
                f"operands live in different coalgebras: "
                f"{self.coalgebra.spec} vs {other.coalgebra.spec}"
            )

    def __add__(self, other):
        self._require_same_context(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            s = terms.get(key, ZERO) + coeff
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return self._from_clean(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar):
        s = coerce_scalar(scalar)
        if s is None:
            return NotImplemented
        if not s:
            return self._from_clean({})
        return self._from_clean({k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def _from_clean(self, terms: dict):
        # Internal constructor: terms already validated and zero-pruned.
        out = object.__new__(type(self))
        out.coalgebra = self.coalgebra
        out._terms = terms
        return out


class Element(_Combination):
    """A finite linear combination of basis vectors of one coalgebra."""

    __slots__ = ()

    def _validate_key(self, coalgebra, key):
        coalgebra.validate_key(key)

    def _entry_sort_key(self, key):
        return self.coalgebra.sort_key(key)

    @classmethod
    def zero(cls, coalgebra) -> "Element":
        return cls(coalgebra)

    @classmethod
    def basis(cls, coalgebra, key) -> "Element":
        return cls(coalgebra, {key: ONE})

    def to_json(self) -> dict:
        return {
            "coalgebra": self.coalgebra.spec,
            "terms": [
                {"key": key.text(), "coeff": coeff.to_json()}
                for key, coeff in self.sorted_terms()
            ],
        }


class TensorElement(_Combination):
    """A finite linear combination of pure tensors key1 (x) key2."""

    __slots__ = ()

    def _validate_key(self, coalgebra, key):
        if not isinstance(key, tuple) or len(key) != 2:
            raise ContextMismatch(f"tensor key must be a pair, got {key!r}")
        coalgebra.validate_key(key[0])
        coalgebra.validate_key(key[1])

    def _entry_sort_key(self, key):
        sk = self.coalgebra.sort_key
        return (sk(key[0]), sk(key[1]))

    def _key_repr(self, key):
        return f"{key[0].text()} (x) {key[1].text()}"

    @classmethod
    def zero(cls, coalgebra) -> "TensorElement":
        return cls(coalgebra)

    def restrict_first(self, predicate) -> "TensorElement":
        """Drop terms whose first tensor slot fails the predicate."""
        return self._from_clean(
            {k: c for k, c in self._terms.items() if predicate(k[0])}
        )

    def to_json(self) -> dict:
        return {
            "coalgebra": self.coalgebra.spec,
            "terms": [
                {
                    "key1": key[0].text(),
                    "key2": key[1].text(),
                    "coeff": coeff.to_json(),
                }
                for key, coeff in self.sorted_terms()
            ],
        }


class TripleTensorElement(_Combination):
    """A finite linear combination of pure triple tensors; used by the
    coassociativity diagnostic."""

    __slots__ = ()

    def _validate_key(self, coalgebra, key):
        if not isinstance(key, tuple) or len(key) != 3:
            raise ContextMismatch(f"triple tensor key must be a triple, got {key!r}")
        for part in key:
            coalgebra.validate_key(part)

    def _entry_sort_key(self, key):
        sk = self.coalgebra.sort_key
        return (sk(key[0]), sk(key[1]), sk(key[2]))

    def _key_repr(self, key):
        return " (x) ".join(part.text() for part in key)

    @classmethod
    def zero(cls, coalgebra) -> "TripleTensorElement":
        return cls(coalgebra)


# ---------------------------------------------------------------------------
# coalgebra descriptors
# ---------------------------------------------------------------------------

class Coalgebra:
    """A named coalgebra presented by a distinguished basis.

    Concrete subclasses fix the key type, the comultiplication on basis
    keys, the degree grading, and optionally a star involution and a
    holomorphic/anti-holomorphic classification.  Descriptors compare
    equal iff their canonical spec strings match.
    """

    name = "?"
    finite = False
    has_degree = True
    has_star = False
    key_text_has_spaces = False

    def __init__(self):
        self._comul_cache: dict = {}

    # -- identity -------------------------------------------------------------

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<coalgebra {self.spec}>"

    # -- structure hooks --------------------------------------------------------

    def validate_key(self, key) -> None:
        raise NotImplementedError

    def comultiply_key(self, key) -> TensorElement:
        raise NotImplementedError

    def degree(self, key) -> int:
        raise NoDegree(f"{self.spec} has no degree grading")

    def tie_key(self, key) -> tuple:
        return ()

    def sort_key(self, key) -> tuple:
        """Graded-lexicographic order: degree first, then a per-instance
        tie-break."""
        if self.has_degree:
            return (self.degree(key), self.tie_key(key))
        return (0, self.tie_key(key))

    def star_key(self, key):
        raise StarUndefined(f"{self.spec} has no star operation")

    def holomorphic_class(self, key) -> str:
        raise Unclassified(f"{self.spec} has no holomorphic classification")

    def window_keys(self, max_degree=None) -> list:
        raise NotImplementedError

    # -- cached comultiplication ---------------------------------------------

    def comul(self, key) -> TensorElement:
        """Comultiplication of a single basis key, memoized."""
        cached = self._comul_cache.get(key)
        if cached is None:
            self.validate_key(key)
            cached = self.comultiply_key(key)
            self._comul_cache[key] = cached
        return cached


# ---------------------------------------------------------------------------
# sesquilinear forms
# ---------------------------------------------------------------------------

class SesquilinearForm:
    """A pairing on basis keys of one coalgebra.

    The extension to elements is conjugate-linear in the first slot and
    linear in the second.
    """

    def __init__(self, spec: str, coalgebra: Coalgebra, pair_fn, hermitian_sampled=None):
        self.spec = spec
        self.coalgebra = coalgebra
        self._pair_fn = pair_fn
        #: For forms with no structural hermiticity guarantee this holds the
        #: result of a window-bounded exhaustive check; None means untested.
        self.hermitian_sampled = hermitian_sampled

    def pair_basis(self, key1, key2) -> GaussianRational:
        self.coalgebra.validate_key(key1)
        self.coalgebra.validate_key(key2)
        return self._pair_fn(key1, key2)

    def __repr__(self):
        return f"<form {self.spec} on {self.coalgebra.spec}>"


# ---------------------------------------------------------------------------
# projection pairs
# ---------------------------------------------------------------------------

class ProjectionPair:
    """Inclusion/projection pair (j, Q) for the coordinate subspace spanned
    by a subset S of the basis; Q j = id on that subspace.

    ``subset=None`` denotes the full basis (identity projection), which is
    the only way to express it for infinite bases.
    """

    __slots__ = ("coalgebra", "subset")

    def __init__(self, coalgebra: Coalgebra, subset: Iterable[BasisKey] | None = None):
        if subset is None:
            self.subset = None
        else:
            keys = frozenset(subset)
            for key in keys:
                coalgebra.validate_key(key)
            self.subset = keys
        self.coalgebra = coalgebra

    @classmethod
    def full(cls, coalgebra: Coalgebra) -> "ProjectionPair":
        return cls(coalgebra, None)

    def is_full(self) -> bool:
        return self.subset is None

    def contains(self, key) -> bool:
        return self.subset is None or key in self.subset

    def include(self, element: Element) -> Element:
        """The inclusion j; requires support inside the subset."""
        if element.coalgebra != self.coalgebra:
            raise ContextMismatch("element and projection live in different coalgebras")
        if self.subset is not None:
            outside = [k for k in element.support() if k not in self.subset]
            if outside:
                texts = sorted(k.text() for k in outside)
                raise NotInSubcoalgebra(
                    "element is not supported in the projection subset: "
                    + ", ".join(texts),
                    keys=texts,
                )
        return element

    def project(self, element: Element) -> Element:
        """The coordinate projection Q; drops coefficients outside the subset."""
        if element.coalgebra != self.coalgebra:
            raise ContextMismatch("element and projection live in different coalgebras")
        if self.subset is None:
            return element
        return _raw(
            Element,
            self.coalgebra,
            {k: c for k, c in element.items() if k in self.subset},
        )


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def _raw(cls, coalgebra, terms: dict):
    # Fast path for results assembled from already-validated keys and
    # nonzero coefficients; public constructors stay validating.
    out = object.__new__(cls)
    out.coalgebra = coalgebra
    out._terms = terms
    return out


def comul_extend(coalgebra: Coalgebra, element: Element) -> TensorElement:
    """Linear extension of the comultiplication to a whole element."""
    if element.coalgebra != coalgebra:
        raise ContextMismatch("element does not belong to the given coalgebra")
    out: dict = {}
    for key, coeff in element.items():
        for pair, c in coalgebra.comul(key).items():
            s = out.get(pair, ZERO) + coeff * c
            if s:
                out[pair] = s
            else:
                out.pop(pair, None)
    return _raw(TensorElement, coalgebra, out)


def pair_extend(form: SesquilinearForm, g: Element, f: Element) -> GaussianRational:
    """Sesquilinear extension of the basis pairing: conjugate-linear in g,
    linear in f."""
    if g.coalgebra != form.coalgebra or f.coalgebra != form.coalgebra:
        raise ContextMismatch("pairing operands must share the form's coalgebra")
    total = ZERO
    for kg, cg in g.items():
        cgc = cg.conjugate()
        for kf, cf in f.items():
            val = form.pair_basis(kg, kf)
            if val:
                total = total + cgc * cf * val
    return total


def pi_action(form: SesquilinearForm, g: Element, tensor: TensorElement) -> Element:
    """Contract the second tensor slot against the symbol g:
    phi (x) f  |->  <g, f> phi, extended linearly."""
    if g.coalgebra != form.coalgebra or tensor.coalgebra != form.coalgebra:
        raise ContextMismatch("operands must share the form's coalgebra")
    # <g, basis key> is reused across tensor terms with the same second slot.
    second_slot: dict = {}
    out: dict = {}
    for (k1, k2), coeff in tensor.items():
        val = second_slot.get(k2)
        if val is None:
            val = ZERO
            for kg, cg in g.items():
                p = form.pair_basis(kg, k2)
                if p:
                    val = val + cg.conjugate() * p
            second_slot[k2] = val
        if not val:
            continue
        s = out.get(k1, ZERO) + coeff * val
        if s:
            out[k1] = s
        else:
            out.pop(k1, None)
    return _raw(Element, form.coalgebra, out)


def star_extend(coalgebra: Coalgebra, element: Element) -> Element:
    """Antilinear extension of the star involution on basis keys."""
    if element.coalgebra != coalgebra:
        raise ContextMismatch("element does not belong to the given coalgebra")
    if not coalgebra.has_star:
        raise StarUndefined(f"{coalgebra.spec} has no star operation")
    out: dict = {}
    for key, coeff in element.items():
        starred = coalgebra.star_key(key)
        s = out.get(starred, ZERO) + coeff.conjugate()
        if s:
            out[starred] = s
        else:
            out.pop(starred, None)
    return _raw(Element, coalgebra, out)


def project(pair: ProjectionPair, element: Element) -> Element:
    """Coordinate projection onto the subset span; idempotent."""
    return pair.project(element)
