"""Generator-image endomorphisms: validation, application, built-ins."""

import pytest

from cuntz import (
    Element,
    EndomorphismValidationError,
    Endomorphism,
    apply_endomorphism,
    canonical_endomorphism,
    identity,
    identity_endomorphism,
    isometry,
    phi1,
    phi2,
    rho,
    validate_endomorphism,
)
from cuntz.sampling import random_element


def test_rho_images_are_valid():
    endo = validate_endomorphism(rho(2).images)
    assert endo.d == 2
    assert not endo.relation_failures()


def test_phi1_and_phi2_validate():
    assert not phi1().relation_failures()
    assert not phi2().relation_failures()


def test_duplicate_image_rejected():
    s1 = isometry(2, 1)
    with pytest.raises(EndomorphismValidationError) as err:
        validate_endomorphism([s1, s1])
    assert any("s1* s2" in failure for failure in err.value.failures)


def test_non_unital_images_rejected():
    # two orthogonal isometries that do not fill the space: completeness fails
    s1 = isometry(3, 1)
    s2 = isometry(3, 2)
    s3 = isometry(3, 3)
    with pytest.raises(EndomorphismValidationError) as err:
        validate_endomorphism([s1 * s1, s2, s3 * s1])
    assert any("completeness" in failure for failure in err.value.failures)


def test_canonical_endomorphism_on_word():
    # rho(s1 s2*) = s1 s1 s2* s1* + s2 s1 s2* s2*
    x = Element.word(2, (1,), (2,))
    expected = Element(2, {((1, 1), (1, 2)): 1, ((2, 1), (2, 2)): 1})
    assert canonical_endomorphism(x) == expected
    assert rho(2).apply(x).equals(expected)


def test_identity_endomorphism_fixes_everything(rng):
    endo = identity_endomorphism(2)
    for _ in range(20):
        x = random_element(rng, 2)
        assert endo.apply(x) == x


def test_canonical_matches_image_form_on_random_elements(rng):
    endo = rho(2)
    for _ in range(20):
        x = random_element(rng, 2)
        assert canonical_endomorphism(x).equals(endo.apply(x))


def test_unitality():
    for endo in (rho(2), phi1(), phi2()):
        assert endo.apply(identity(2)).equals(identity(2))


def test_multiplicativity_and_star(rng):
    endos = [rho(2), phi1(), phi2()]
    for endo in endos:
        for _ in range(12):
            x, y = random_element(rng, 2), random_element(rng, 2)
            assert endo.apply(x * y).equals(endo.apply(x) * endo.apply(y))
            assert endo.apply(x.adjoint()).equals(endo.apply(x).adjoint())


def test_apply_endomorphism_matches_method():
    x = Element.word(2, (1,), (2,))
    assert apply_endomorphism(rho(2), x) == rho(2).apply(x)


def test_mismatched_d_rejected():
    from cuntz import AlphabetMismatchError

    with pytest.raises(AlphabetMismatchError):
        rho(2).apply(Element.word(3, (1,), ()))


def test_image_count_must_match_d():
    from cuntz import IndexRangeError

    with pytest.raises(IndexRangeError):
        Endomorphism([isometry(3, 1), isometry(3, 2)])
