import pytest

from taurank.exceptions import ShapeMismatchError
from taurank.scripts.util import dump_json
from taurank.scripts.util import format_dims
from taurank.scripts.util import load_algebra
from taurank.scripts.util import load_ideal
from taurank.scripts.util import parse_multiplicities


def test_parse_multiplicities(alg_a):
    decomp = parse_multiplicities('0, 2,1', alg_a)
    assert decomp.multiplicities == (0, 2, 1)


@pytest.mark.parametrize('value,message', [
    ('0,x,1', r'comma separated integers'),
    ('0,-1,1', r'negative multiplicity'),
    ('0,1', r'2 entries for 3 vertices'),
])
def test_parse_multiplicities_errors(alg_a, value, message):
    with pytest.raises(ShapeMismatchError, match=message):
        parse_multiplicities(value, alg_a)


def test_format_and_dump():
    assert format_dims((1, 0, 2)) == '(1,0,2)'
    assert dump_json({'b': [1, 2], 'a': 'τ'}) \
        == '{\n  "a": "τ",\n  "b": [\n    1,\n    2\n  ]\n}'


def test_load_algebra_and_ideal(qa_file, tmpdir, caplog):
    caplog.set_level('INFO')
    algebra = load_algebra(qa_file('ALG-B0'))
    assert algebra.dim == 6
    assert 'loaded <ALG-B0 dim=6 over Q>' in caplog.text

    path = tmpdir.join('ideal.txt')
    path.write_text('a*b\n', encoding='utf-8')
    assert load_ideal(algebra, str(path)).dim == 1
