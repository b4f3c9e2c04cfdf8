"""Machine-checkable certificates for positivity and cone membership.

Two document kinds are produced: a positivity certificate listing every
folded coefficient of a family element together with a sign verdict,
and a cone certificate carrying the interval/singleton decomposition of
a closed-form witness plus a recomposition verdict.  Coefficients and
part counts serialize as decimal strings, never as machine integers:
depth 4 values exceed 64-bit range and JSON number semantics are not
trustworthy there.  Key order in emitted documents is fixed so that
regenerated suites diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .multiset_cone import ConeDecomposition, decompose_cone, in_cone
from .recurrence_engine import (
    VALID_I,
    VALID_J,
    e0_closed,
    e1_closed,
    raw_element,
)
from .tilde_ring import fold_L

SCHEMA_VERSION = 1


def positivity_cone_bound(n: int, i: int, j: int) -> int:
    """Center of the cone that forces non-negativity of the (n, i, j) element.

    The slot-0 witnesses live at 2^(n+1) - j; shifting down by one (the
    other slots) lowers the usable center by one, and the slot -1
    penultimate element is a union of two pieces both valid at
    2^(n+1) - 2.
    """
    if j == 0:
        return 2 ** (n + 1) if i == 0 else 2 ** (n + 1) - 1
    return 2 ** (n + 1) - 1 if i == 0 else 2 ** (n + 1) - 2


@dataclass(frozen=True)
class PositivityCertificate:
    """Folded coefficient listing with a sign verdict.

    `coefficients` holds (index, decimal string) pairs sorted by index;
    `mass` is the decimal coefficient sum; `cone_bound` records the cone
    center that explains why the verdict had to come out non-negative.
    """

    n: int
    i: int
    j: int
    coefficients: tuple[tuple[int, str], ...]
    all_nonnegative: bool
    max_index: int | None
    mass: str
    cone_bound: int

    def to_document(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "positivity",
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "cone_bound": self.cone_bound,
            "coefficients": [[idx, c] for idx, c in self.coefficients],
            "all_nonnegative": self.all_nonnegative,
            "max_index": self.max_index,
            "mass": self.mass,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "PositivityCertificate":
        if doc.get("kind") != "positivity":
            raise ValueError(f"not a positivity document: kind={doc.get('kind')!r}")
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
        return cls(
            n=doc["n"],
            i=doc["i"],
            j=doc["j"],
            coefficients=tuple((idx, c) for idx, c in doc["coefficients"]),
            all_nonnegative=doc["all_nonnegative"],
            max_index=doc["max_index"],
            mass=doc["mass"],
            cone_bound=doc["cone_bound"],
        )


def certify_positivity(n: int, i: int, j: int) -> PositivityCertificate:
    """Fold the (n, i, j) element and record the sign of every coefficient."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    if i not in VALID_I or j not in VALID_J:
        raise ValueError(f"invalid slot/order pair ({i}, {j})")
    folded = fold_L(raw_element(n, i, j))
    coeffs = tuple((idx, str(c)) for idx, c in folded.terms())
    return PositivityCertificate(
        n=n,
        i=i,
        j=j,
        coefficients=coeffs,
        all_nonnegative=folded.all_nonnegative(),
        max_index=folded.max_index(),
        mass=str(sum(c for _, c in folded.terms())),
        cone_bound=positivity_cone_bound(n, i, j),
    )


@dataclass(frozen=True)
class ConeCertificate:
    """Cone membership certificate for a closed-form witness.

    The decomposition stores (value, count) and (radius, count) pairs;
    recomposition_ok is True iff rebuilding from the parts reproduces
    the witness multiset exactly.
    """

    n: int
    j: int
    center: int
    decomposition: ConeDecomposition
    recomposition_ok: bool

    def to_document(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "cone",
            "n": self.n,
            "j": self.j,
            "center": self.center,
            "singletons": [[v, str(cnt)] for v, cnt in self.decomposition.singletons],
            "radii": [[r, str(cnt)] for r, cnt in self.decomposition.radii],
            "recomposition_ok": self.recomposition_ok,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "ConeCertificate":
        if doc.get("kind") != "cone":
            raise ValueError(f"not a cone document: kind={doc.get('kind')!r}")
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
        decomposition = ConeDecomposition(
            center=doc["center"],
            singletons=tuple((v, int(cnt)) for v, cnt in doc["singletons"]),
            radii=tuple((r, int(cnt)) for r, cnt in doc["radii"]),
        )
        return cls(
            n=doc["n"],
            j=doc["j"],
            center=doc["center"],
            decomposition=decomposition,
            recomposition_ok=doc["recomposition_ok"],
        )


def certify_cone(n: int, j: int) -> ConeCertificate:
    """Decompose the depth-n witness of order j and validate recomposition."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    if j not in VALID_J:
        raise ValueError(f"order must be 0 or 1, got {j}")
    witness = e0_closed(n) if j == 0 else e1_closed(n)
    center = witness.cone_center()
    # decompose_cone raises with a witness offset if membership fails,
    # which would falsify the structural theorems upstream
    decomposition = decompose_cone(witness.M, center)
    return ConeCertificate(
        n=n,
        j=j,
        center=center,
        decomposition=decomposition,
        recomposition_ok=decomposition.recompose() == witness.M,
    )


def check_positivity_implication(
    cone_cert: ConeCertificate, pos_certs: list[PositivityCertificate]
) -> None:
    """A valid cone certificate at center >= 0 forces every positivity verdict.

    Raises RuntimeError when the implication is violated, which would
    mean the two certificate routes disagree.
    """
    if not cone_cert.recomposition_ok or cone_cert.center < 0:
        return
    for pc in pos_certs:
        if not pc.all_nonnegative:
            raise RuntimeError(
                f"cone certificate (n={cone_cert.n}, j={cone_cert.j}) is valid at "
                f"center {cone_cert.center} but positivity fails for slot {pc.i}"
            )


def certify_pair(n: int, j: int) -> tuple[ConeCertificate, list[PositivityCertificate]]:
    """Cone certificate plus the three slot positivity certificates at (n, j)."""
    cone_cert = certify_cone(n, j)
    pos_certs = [certify_positivity(n, i, j) for i in VALID_I]
    check_positivity_implication(cone_cert, pos_certs)
    return cone_cert, pos_certs


def document_json(doc: dict) -> str:
    """Canonical serialized form: fixed key order, one key per line."""
    return json.dumps(doc, indent=1) + "\n"


def parse_document(text: str) -> dict:
    return json.loads(text)
