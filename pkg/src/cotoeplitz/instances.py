"""The four concrete coalgebras, their weight families and pairings.

* quantum plane (``manin``): monomials a^i c^j with
  Delta(a^k c^l) = a^k c^l (x) a^{k+l}, graded by total degree k+l;
* divided powers (``divpow``): basis x_0, x_1, ... with
  Delta(x_n) = sum_{i+j=n} x_i (x) x_j;
* bounded degrees (``negdeg``): basis x_{-M} .. x_M with the same sum
  truncated to in-range indices, a star x_n -> x_{-n}, and a
  holomorphic/anti-holomorphic split by the sign of the index;
* matrix units (``matrix``): basis E_{i,j}, 1 <= i,j <= n, with
  Delta(E_{i,j}) = sum_k E_{i,k} (x) E_{k,j} and star E_{i,j} -> E_{j,i}.

Weight families are strictly positive rationals on their index domain;
multi-argument weights are per-argument products of one family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Coalgebra,
    DividedKey,
    ManinKey,
    MatrixKey,
    NegDegKey,
    SesquilinearForm,
    TensorElement,
)
from .errors import (
    FormMismatch,
    InvalidParameter,
    InvalidWeightDomain,
    KeyOutOfRange,
    WrongCoalgebra,
)
from .scalars import ONE, ZERO, GaussianRational, as_scalar


# ---------------------------------------------------------------------------
# weight families
# ---------------------------------------------------------------------------

WEIGHT_KINDS = ("one", "factorial", "absfactorial", "geom", "poly")


@dataclass(frozen=True)
class WeightFamily:
    """A strictly positive rational weight, indexed by integers.

    Kinds: ``one`` (constant 1), ``factorial`` (i!, nonnegative domain
    only), ``absfactorial`` (|i|!), ``geom`` (r^i for a positive rational
    r), ``poly`` ((1+|i|)^k).  Applied to several indices, the value is
    the product over the indices.
    """

    kind: str
    param: Fraction | int | None = None

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise InvalidParameter(f"unknown weight family: {self.kind}")
        if self.kind == "geom":
            if not isinstance(self.param, Fraction) or self.param <= 0:
                raise InvalidParameter("geom weight needs a positive rational ratio")
        if self.kind == "poly":
            if not isinstance(self.param, int) or self.param < 0:
                raise InvalidParameter("poly weight needs a nonnegative integer degree")

    @property
    def spec(self) -> str:
        if self.kind == "geom":
            return f"geom:{self.param}"
        if self.kind == "poly":
            return f"poly:{self.param}"
        return self.kind

    @property
    def allows_negative(self) -> bool:
        return self.kind != "factorial"

    def value(self, index: int) -> Fraction:
        if self.kind == "one":
            return Fraction(1)
        if self.kind == "factorial":
            if index < 0:
                raise InvalidWeightDomain(
                    "factorial weight is undefined on negative indices"
                )
            return Fraction(math.factorial(index))
        if self.kind == "absfactorial":
            return Fraction(math.factorial(abs(index)))
        if self.kind == "geom":
            return self.param ** index
        # poly
        return Fraction((1 + abs(index)) ** self.param)

    def __call__(self, *indices: int) -> Fraction:
        out = Fraction(1)
        for index in indices:
            out *= self.value(index)
        return out


ONE_WEIGHT = WeightFamily("one")


# ---------------------------------------------------------------------------
# coalgebra instances
# ---------------------------------------------------------------------------

class ManinPlane(Coalgebra):
    """Quantum-plane coalgebra on the monomial basis a^i c^j.

    The generators satisfy a c = q c a for a fixed nonzero scalar q; the
    comultiplication sends a^k c^l to a^k c^l (x) a^{k+l}.  q itself only
    enters through the normal-ordering product used by the morphism
    diagnostics.
    """

    name = "manin"
    key_text_has_spaces = True

    def __init__(self, q=Fraction(2, 3)):
        super().__init__()
        q = as_scalar(q)
        if not q:
            raise InvalidParameter("manin: q must be nonzero")
        self.q = q

    @property
    def spec(self) -> str:
        return f"manin?q={self.q}"

    def validate_key(self, key):
        if not isinstance(key, ManinKey):
            raise WrongCoalgebra(f"{self.spec} expects a^i c^j keys, got {key!r}")

    def comultiply_key(self, key) -> TensorElement:
        return TensorElement(self, {(key, ManinKey(key.i + key.j, 0)): ONE})

    def degree(self, key) -> int:
        return key.i + key.j

    def tie_key(self, key) -> tuple:
        # Within one degree: a^d first, then a^{d-1} c^1, ..., down to c^d.
        return (-key.i,)

    def window_keys(self, max_degree=None) -> list:
        if max_degree is None:
            raise InvalidParameter("manin basis is infinite; a degree bound is required")
        keys = []
        for d in range(max_degree + 1):
            for i in range(d, -1, -1):
                keys.append(ManinKey(i, d - i))
        return keys


class DividedPower(Coalgebra):
    """Divided-power coalgebra on x_0, x_1, ... with
    Delta(x_n) = sum_{i+j=n} x_i (x) x_j."""

    name = "divpow"

    @property
    def spec(self) -> str:
        return "divpow"

    def validate_key(self, key):
        if not isinstance(key, DividedKey):
            raise WrongCoalgebra(f"{self.spec} expects x_n keys with n >= 0, got {key!r}")

    def comultiply_key(self, key) -> TensorElement:
        n = key.n
        return TensorElement(
            self, {(DividedKey(i), DividedKey(n - i)): ONE for i in range(n + 1)}
        )

    def degree(self, key) -> int:
        return key.n

    def window_keys(self, max_degree=None) -> list:
        if max_degree is None:
            raise InvalidParameter("divpow basis is infinite; a degree bound is required")
        return [DividedKey(n) for n in range(max_degree + 1)]


class NegativeDegree(Coalgebra):
    """Truncation of the divided-power coalgebra to indices |n| <= M.

    Out-of-range tensor factors are dropped from the comultiplication, so
    Delta(x_n) has exactly 2M+1-|n| terms.  The truncation breaks
    coassociativity; the diagnostics report that honestly instead of
    hiding it.
    """

    name = "negdeg"
    finite = True
    has_star = True

    def __init__(self, M: int):
        super().__init__()
        if not isinstance(M, int) or M < 1:
            raise InvalidParameter("negdeg: M must be an integer >= 1")
        self.M = M

    @property
    def spec(self) -> str:
        return f"negdeg?M={self.M}"

    def validate_key(self, key):
        if not isinstance(key, NegDegKey):
            raise WrongCoalgebra(f"{self.spec} expects x_n keys, got {key!r}")
        if abs(key.n) > self.M:
            raise KeyOutOfRange(f"x_{key.n}: index must satisfy |n| <= {self.M}")

    def comultiply_key(self, key) -> TensorElement:
        n, M = key.n, self.M
        lo = max(-M, n - M)
        hi = min(M, n + M)
        return TensorElement(
            self,
            {(NegDegKey(i), NegDegKey(n - i)): ONE for i in range(lo, hi + 1)},
        )

    def degree(self, key) -> int:
        return key.n

    def star_key(self, key):
        return NegDegKey(-key.n)

    def holomorphic_class(self, key) -> str:
        if key.n > 0:
            return "holomorphic"
        if key.n < 0:
            return "anti-holomorphic"
        return "none"

    def window_keys(self, max_degree=None) -> list:
        hi = self.M if max_degree is None else min(self.M, max_degree)
        return [NegDegKey(n) for n in range(-self.M, hi + 1)]


class MatrixCoalgebra(Coalgebra):
    """Matrix-unit coalgebra on E_{i,j}, 1 <= i,j <= n, with index
    contraction as comultiplication."""

    name = "matrix"
    finite = True
    has_star = True

    def __init__(self, n: int):
        super().__init__()
        if not isinstance(n, int) or n < 1:
            raise InvalidParameter("matrix: n must be an integer >= 1")
        self.n = n

    @property
    def spec(self) -> str:
        return f"matrix?n={self.n}"

    def validate_key(self, key):
        if not isinstance(key, MatrixKey):
            raise WrongCoalgebra(f"{self.spec} expects E_i_j keys, got {key!r}")
        if key.i > self.n or key.j > self.n:
            raise KeyOutOfRange(
                f"E_{key.i}_{key.j}: indices must lie in 1..{self.n}"
            )

    def comultiply_key(self, key) -> TensorElement:
        return TensorElement(
            self,
            {
                (MatrixKey(key.i, k), MatrixKey(k, key.j)): ONE
                for k in range(1, self.n + 1)
            },
        )

    def degree(self, key) -> int:
        return key.i + key.j

    def tie_key(self, key) -> tuple:
        return (key.i, key.j)

    def star_key(self, key):
        return MatrixKey(key.j, key.i)

    def holomorphic_class(self, key) -> str:
        if key.i < key.j:
            return "holomorphic"
        if key.i > key.j:
            return "anti-holomorphic"
        return "real"

    def window_keys(self, max_degree=None) -> list:
        top = 2 * self.n if max_degree is None else min(2 * self.n, max_degree)
        keys = []
        for d in range(2, top + 1):
            for i in range(max(1, d - self.n), min(self.n, d - 1) + 1):
                keys.append(MatrixKey(i, d - i))
        return keys


# ---------------------------------------------------------------------------
# normal-ordering product on the quantum plane
# ---------------------------------------------------------------------------

def manin_product(u: ManinKey, v: ManinKey, q) -> tuple:
    """Normal-ordered product of monomials:
    (a^i c^j)(a^k c^l) = q^{-jk} a^{i+k} c^{j+l}.

    Each of the j trailing c's swaps past each of the k leading a's, and a
    single swap c a -> q^{-1} a c contributes one inverse power of q.
    Only the morphism diagnostics need this product.
    """
    q = as_scalar(q)
    if not q:
        raise ZeroDivisionError("manin product needs a nonzero q")
    coeff = q ** (-(u.j * v.i))
    return coeff, ManinKey(u.i + v.i, u.j + v.j)


# ---------------------------------------------------------------------------
# form specs and binding
# ---------------------------------------------------------------------------

FORM_KINDS = ("manin-orth", "manin-skew", "diag", "matrix-orth", "matrix-weighted")


@dataclass(frozen=True)
class FormSpec:
    """An unbound pairing recipe; bind to a coalgebra with make_form."""

    kind: str
    weight: WeightFamily | None = None

    def __post_init__(self):
        if self.kind not in FORM_KINDS:
            raise InvalidParameter(f"unknown form kind: {self.kind}")
        if self.kind == "matrix-orth":
            if self.weight is not None:
                raise InvalidParameter("matrix-orth takes no weight")
        elif self.weight is None:
            raise InvalidParameter(f"{self.kind} needs a weight family")

    @property
    def spec(self) -> str:
        if self.kind == "matrix-orth":
            return "matrix-orth"
        label = "mu" if self.kind == "manin-skew" else "w"
        return f"{self.kind}?{label}={self.weight.spec}"


def make_form(form_spec: FormSpec, coalgebra: Coalgebra) -> SesquilinearForm:
    """Bind a form spec to a coalgebra, validating the combination.

    The five pairings on basis keys:

    * ``manin-orth``:      <a^i c^j, a^k c^l> = [i=k][j=l] w(i,j)
    * ``manin-skew``:      <a^i c^j, a^k c^l> = [i-j=k-l] mu(i,j,k,l)
    * ``diag``:            <x_i, x_j>         = [i=j] w(i)
    * ``matrix-orth``:     <E_ij, E_rs>       = [i=r][j=s]
    * ``matrix-weighted``: <E_ij, E_rs>       = [i-j=r-s] w(i+s)
    """
    kind = form_spec.kind
    w = form_spec.weight

    if kind in ("manin-orth", "manin-skew"):
        if not isinstance(coalgebra, ManinPlane):
            raise FormMismatch(f"{kind} only binds to the manin coalgebra")
    elif kind == "diag":
        if not isinstance(coalgebra, (DividedPower, NegativeDegree)):
            raise FormMismatch("diag only binds to divpow or negdeg")
        if isinstance(coalgebra, NegativeDegree) and not w.allows_negative:
            raise InvalidWeightDomain(
                f"{w.spec} is undefined on negative indices; "
                "use absfactorial, one, geom, or poly for negdeg"
            )
    else:
        if not isinstance(coalgebra, MatrixCoalgebra):
            raise FormMismatch(f"{kind} only binds to the matrix coalgebra")

    if kind == "manin-orth":
        def pair(k1, k2):
            if k1.i == k2.i and k1.j == k2.j:
                return GaussianRational(w(k1.i, k1.j))
            return ZERO
    elif kind == "manin-skew":
        def pair(k1, k2):
            if k1.i - k1.j == k2.i - k2.j:
                return GaussianRational(w(k1.i, k1.j, k2.i, k2.j))
            return ZERO
    elif kind == "diag":
        def pair(k1, k2):
            if k1.n == k2.n:
                return GaussianRational(w(k1.n))
            return ZERO
    elif kind == "matrix-orth":
        def pair(k1, k2):
            return ONE if k1 == k2 else ZERO
    else:  # matrix-weighted
        def pair(k1, k2):
            if k1.i - k1.j == k2.i - k2.j:
                return GaussianRational(w(k1.i + k2.j))
            return ZERO

    hermitian_sampled = None
    if kind == "manin-skew":
        # No structural guarantee for a general mu: record a window-bounded
        # exhaustive hermiticity check alongside the form.
        keys = coalgebra.window_keys(6)
        hermitian_sampled = all(
            pair(b1, b2) == pair(b2, b1).conjugate()
            for b1 in keys
            for b2 in keys
        )

    return SesquilinearForm(form_spec.spec, coalgebra, pair, hermitian_sampled)
