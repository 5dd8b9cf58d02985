import json
import pytest

from taurank.exceptions import ModuleFileError
from taurank.exceptions import RelationViolationError
from taurank.fixtures.modules import reduction_module
from taurank.modules.io import dump_module
from taurank.modules.io import load_module
from taurank.modules.io import module_from_json
from taurank.modules.iso import iso_test


def test_module_from_json(alg_b):
    module = module_from_json(alg_b, {
        'algebra': 'alg_b.qa',
        'dim': [1, 1, 0],
        'arrows': {'a': [['-1/2']]},
    })
    assert module.dims == (1, 1, 0)
    assert module.describe()['arrows'] == {'a': [['-1/2']], 'b': [[]]}


@pytest.mark.parametrize('data,message', [
    ([], r'JSON object'),
    ({'dim': [1, 1]}, r'"dim" has 2 entries for 3 vertices'),
    ({'dim': [1, -1, 0]}, r'non-negative'),
    ({'dim': [1, 1, 0], 'arrows': []}, r'"arrows" must map'),
    ({'dim': [1, 1, 0], 'arrows': {'z': [[1]]}}, r'unknown arrow.*: z'),
    ({'dim': [1, 1, 0], 'arrows': {'a': [[1], [1]]}},
     r'arrow a needs 1 rows of 1 entries'),
    ({'dim': [1, 1, 0], 'arrows': {'a': [['x']]}},
     r'arrow a: not a rational number'),
])
def test_malformed_module(alg_b, data, message):
    with pytest.raises(ModuleFileError, match=message):
        module_from_json(alg_b, data)


def test_relation_violation(alg_b):
    with pytest.raises(RelationViolationError):
        module_from_json(alg_b, {
            'dim': [1, 1, 1],
            'arrows': {'a': [[1]], 'b': [[1]]},
        })


def test_load_invalid_json(alg_b, tmpdir):
    path = tmpdir.join('broken.mod.json')
    path.write_text('{"dim": [1, ', encoding='utf-8')
    with pytest.raises(ModuleFileError, match=r'not valid JSON'):
        load_module(alg_b, str(path))


def test_dump_and_load(alg_b0, tmpdir):
    module = reduction_module(alg_b0)
    path = str(tmpdir.join('m.mod.json'))
    dump_module(module, path, 'alg_b0.qa')
    with open(path, encoding='utf-8') as f:
        data = json.load(f)
    assert data['algebra'] == 'alg_b0.qa'
    assert data['dim'] == [1, 2, 2]

    loaded = load_module(alg_b0, path)
    assert loaded.describe() == module.describe()
    assert iso_test(loaded, module)
