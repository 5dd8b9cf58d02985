from taurank.ar.nakayama import nakayama_complex
from taurank.ar.translate import tau
from taurank.ar.translate import tau_minus
from taurank.fixtures.modules import simples
from taurank.modules.constructions import injective
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.iso import iso_test
from taurank.presentations.complex import min_presentation


def test_tau_of_simples(alg_b):
    assert iso_test(tau(simple(alg_b, 1)), simple(alg_b, 0))
    assert iso_test(tau(simple(alg_b, 2)), simple(alg_b, 1))
    assert tau(simples(alg_b, '2', '3')).dims == (1, 1, 0)


def test_tau_of_projectives(all_algebras):
    for algebra in all_algebras:
        for v in range(algebra.vertex_count):
            assert tau(projective(algebra, v)).is_zero
            assert tau_minus(injective(algebra, v)).is_zero


def test_tau_minus(alg_b):
    translate = tau_minus(simple(alg_b, 0))
    assert translate.algebra is alg_b
    assert iso_test(translate, simple(alg_b, 1))
    assert iso_test(tau_minus(simple(alg_b, 1)), simple(alg_b, 2))


def test_kronecker_preinjectives(alg_k):
    translate = tau(injective(alg_k, 1))
    assert translate.dims == (2, 3)
    assert iso_test(tau_minus(translate), injective(alg_k, 1))


def test_nakayama_sends_projectives_to_injectives(alg_a, cok_f):
    presentation = min_presentation(cok_f)
    f = nakayama_complex(presentation)
    assert f.source.dims == injective(alg_a, 1).dims
    assert f.target.dims == injective(alg_a, 2).dims
    f.validate()
