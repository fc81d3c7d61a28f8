import json

import pytest

from symcoh import classification as cls, modelfile
from symcoh.ce_model import CATALOG, thurston, validate

THURSTON_DOC = {
    "name": "thurston",
    "generators": ["x*", "p*", "z*", "h*"],
    "d": {"h*": [{"coeff": "-1", "indices": ["x*", "p*"]}]},
    "omega": [{"coeff": "1", "indices": [4, 1]}, {"coeff": "1", "indices": [3, 2]}],
    "vol": "1",
}


def test_parse_thurston_document():
    m = modelfile.from_dict(THURSTON_DOC)
    ref = thurston()
    assert m.omega == ref.omega and m.d_table == ref.d_table and m.vol == ref.vol
    assert validate(m).ok


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_round_trip(name):
    m = CATALOG[name]()
    back = modelfile.loads(modelfile.dumps(m))
    assert back.generators == m.generators
    assert back.omega == m.omega and back.d_table == m.d_table
    assert back.declared_vol == m.declared_vol
    a, b = cls.from_ce_model(m), cls.from_ce_model(back)
    for alg in cls.H2_ALGEBRAS:
        assert cls.h2(a, alg) == cls.h2(b, alg)


def test_vol_defaults_to_liouville_coefficient():
    doc = dict(THURSTON_DOC)
    del doc["vol"]
    assert modelfile.from_dict(doc).vol == 1


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("omega"),
    lambda d: d.update(extra=1),
    lambda d: d.update(generators=["a", "a"]),
    lambda d: d.update(omega=[{"coeff": 1.5, "indices": [1, 2]}]),
    lambda d: d.update(omega=[{"coeff": "1/0", "indices": [1, 2]}]),
    lambda d: d.update(omega=[{"coeff": "1", "indices": [1, 9]}]),
    lambda d: d.update(omega=[{"coeff": "1", "indices": [1]}]),
    lambda d: d.update(d={"w*": []}),
    lambda d: d.update(vol="abc"),
])
def test_malformed_documents(mutate):
    doc = json.loads(json.dumps(THURSTON_DOC))
    mutate(doc)
    with pytest.raises(modelfile.ModelFileError):
        modelfile.from_dict(doc)


def test_invalid_json():
    with pytest.raises(modelfile.ModelFileError):
        modelfile.loads("{not json")
