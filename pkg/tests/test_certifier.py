"""Unit tests for certificate generation and serialization."""

import pytest

from chebcone.certifier import (
    ConeCertificate,
    PositivityCertificate,
    certify_cone,
    certify_pair,
    certify_positivity,
    check_positivity_implication,
    document_json,
    parse_document,
    positivity_cone_bound,
)


def test_positivity_certificate_basic():
    pc = certify_positivity(1, 0, 0)
    assert pc.coefficients == ((2, "1"), (4, "1"), (6, "1"))
    assert pc.all_nonnegative
    assert pc.max_index == 6
    assert pc.mass == "3"
    assert pc.cone_bound == 4


def test_positivity_certificate_vacuous():
    pc = certify_positivity(0, 0, 1)
    assert pc.coefficients == ()
    assert pc.all_nonnegative
    assert pc.max_index is None
    assert pc.mass == "0"


def test_positivity_certificate_doubled_slot():
    pc = certify_positivity(1, -1, 1)
    assert pc.coefficients == ((0, "2"), (2, "2"), (4, "2"))
    assert pc.all_nonnegative


def test_cone_bounds():
    assert positivity_cone_bound(1, 0, 0) == 4
    assert positivity_cone_bound(1, 1, 0) == 3
    assert positivity_cone_bound(1, -1, 0) == 3
    assert positivity_cone_bound(1, 0, 1) == 3
    assert positivity_cone_bound(1, 1, 1) == 2
    assert positivity_cone_bound(1, -1, 1) == 2
    # bounds stay non-negative at depth zero for every slot
    assert min(positivity_cone_bound(0, i, j) for i in (-1, 0, 1) for j in (0, 1)) == 0


def test_cone_certificate_examples():
    cc = certify_cone(1, 0)
    assert cc.center == 4
    assert cc.decomposition.radii == ((2, 1),)
    assert cc.decomposition.singletons == ()
    assert cc.recomposition_ok

    cc = certify_cone(0, 1)
    assert cc.center == 1
    assert cc.decomposition.radii == () and cc.decomposition.singletons == ()
    assert cc.recomposition_ok

    cc = certify_cone(2, 0)
    assert cc.center == 8
    assert cc.recomposition_ok


def test_certify_argument_validation():
    with pytest.raises(ValueError):
        certify_positivity(-1, 0, 0)
    with pytest.raises(ValueError):
        certify_positivity(1, 2, 0)
    with pytest.raises(ValueError):
        certify_cone(1, 2)


def test_positivity_roundtrip():
    for args in ((0, 0, 1), (1, -1, 1), (2, 0, 0), (3, 1, 1)):
        pc = certify_positivity(*args)
        doc = pc.to_document()
        text = document_json(doc)
        assert PositivityCertificate.from_document(parse_document(text)) == pc


def test_cone_roundtrip():
    for n, j in ((0, 0), (1, 1), (2, 0), (3, 1)):
        cc = certify_cone(n, j)
        text = document_json(cc.to_document())
        assert ConeCertificate.from_document(parse_document(text)) == cc


def test_roundtrip_preserves_large_counts():
    # depth-4 certificates have counts far beyond 64-bit range
    cc = certify_cone(4, 0)
    big = max(cnt for _, cnt in cc.decomposition.radii)
    assert big > 2**64
    restored = ConeCertificate.from_document(parse_document(document_json(cc.to_document())))
    assert restored == cc

    pc = certify_positivity(4, 0, 0)
    assert int(pc.mass) > 2**64
    restored_pc = PositivityCertificate.from_document(
        parse_document(document_json(pc.to_document()))
    )
    assert restored_pc == pc


def test_from_document_rejects_wrong_kind():
    pc_doc = certify_positivity(1, 0, 0).to_document()
    with pytest.raises(ValueError):
        ConeCertificate.from_document(pc_doc)
    cc_doc = certify_cone(1, 0).to_document()
    with pytest.raises(ValueError):
        PositivityCertificate.from_document(cc_doc)
    bad = dict(pc_doc)
    bad["schema_version"] = 999
    with pytest.raises(ValueError):
        PositivityCertificate.from_document(bad)


def test_certify_pair_asserts_implication():
    for n in range(3):
        for j in (0, 1):
            cone_cert, pos_certs = certify_pair(n, j)
            assert cone_cert.recomposition_ok
            assert len(pos_certs) == 3
            assert all(pc.all_nonnegative for pc in pos_certs)
            # does not raise on consistent pairs
            check_positivity_implication(cone_cert, pos_certs)


def test_implication_violation_raises():
    cone_cert, pos_certs = certify_pair(1, 0)
    broken = PositivityCertificate(
        n=1,
        i=0,
        j=0,
        coefficients=((2, "-1"),),
        all_nonnegative=False,
        max_index=2,
        mass="-1",
        cone_bound=4,
    )
    with pytest.raises(RuntimeError):
        check_positivity_implication(cone_cert, [broken])


def test_document_key_order_is_stable():
    doc = certify_positivity(1, 0, 0).to_document()
    assert list(doc.keys()) == [
        "schema_version",
        "kind",
        "n",
        "i",
        "j",
        "cone_bound",
        "coefficients",
        "all_nonnegative",
        "max_index",
        "mass",
    ]
    assert document_json(doc) == document_json(certify_positivity(1, 0, 0).to_document())
