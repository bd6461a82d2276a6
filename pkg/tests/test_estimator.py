import random

import pytest
from sklearn.base import clone

from gabidulin.estimator import GabidulinDecoder, GabidulinEncoder, NotFittedError
from gabidulin.instances import corrupt, finite_code, random_error, random_message


@pytest.fixture
def setup():
    rng = random.Random(12)
    code = finite_code(2, 6, 6, 2, rng)
    msgs = [random_message(code, rng) for _ in range(5)]
    return code, msgs, rng


def test_encoder_matches_code(setup):
    code, msgs, _ = setup
    enc = GabidulinEncoder(code.theta, k=2).fit(code.g)
    assert enc.transform(msgs) == [code.encode(f) for f in msgs]
    assert enc.n_features_in_ == 6


def test_encoder_accepts_coefficient_lists(cyclo_code):
    enc = GabidulinEncoder(cyclo_code.theta, 2).fit(cyclo_code.g)
    a = cyclo_code.field.gen
    assert enc.transform([[a ** 2, a ** 5]])[0][2] == 2 * a ** 4


def test_decoder_predict_and_score(setup):
    code, msgs, rng = setup
    words = [corrupt(code.encode(f), random_error(code, 2, rng)) for f in msgs]
    dec = GabidulinDecoder(code.theta, k=2, method="wb-df").fit(code.g)
    assert dec.predict(words) == msgs
    assert dec.score(words, msgs) == 1.0
    assert dec.decode_one(words[0]).f == msgs[0]


def test_decoder_reports_failures_as_none():
    rng = random.Random(3)
    code = finite_code(2, 5, 5, 1, rng)
    dec = GabidulinDecoder(code.theta, k=1).fit(code.g)
    f = random_message(code, rng)
    words = [corrupt(code.encode(f), random_error(code, 4, rng)) for _ in range(15)]
    out = dec.predict(words)
    assert None in out
    assert dec.score(words, [f] * 15) < 1.0


def test_not_fitted_and_bad_inputs(setup):
    code, msgs, _ = setup
    with pytest.raises(NotFittedError):
        GabidulinDecoder(code.theta, 2).predict([])
    with pytest.raises(ValueError):
        GabidulinDecoder(code.theta, 2, method="nope").fit(code.g)
    dec = GabidulinDecoder(code.theta, 2).fit(code.g)
    with pytest.raises(ValueError):
        dec.predict([[code.field.zero] * 5])
    with pytest.raises(TypeError):
        dec.predict("words")
    with pytest.raises(TypeError):
        GabidulinEncoder("theta", 2).fit(code.g)
    with pytest.raises(ValueError):
        GabidulinEncoder(code.theta, 2).fit(code.g).transform([[1, 1, 1]])


def test_params_and_clone(setup):
    code, _, _ = setup
    dec = GabidulinDecoder(code.theta, k=3, method="gauss")
    assert dec.get_params()["method"] == "gauss"
    other = clone(dec).set_params(k=2)
    assert other.k == 2 and dec.k == 3
