import io
import pickle

from contextract import ContextExtractor
from test._data import load_fixture


def test_configurable_classes_are_picklable():
    obj = ContextExtractor(final_contexts=3, scheme_direction="rootward")
    with io.BytesIO() as f:
        pickle.dump(obj, f)
        f.seek(0)
        obj2 = pickle.load(f)
    assert str(obj) == str(obj2)  # Should work, as involved classes inherit from BaseEstimator


def test_fitted_extractor_is_picklable():
    extractor = ContextExtractor().fit(load_fixture("shared_concept.tsv"))
    restored = pickle.loads(pickle.dumps(extractor))
    document = "the mouse and the keyboard"
    assert restored.extract(document) == extractor.extract(document)
