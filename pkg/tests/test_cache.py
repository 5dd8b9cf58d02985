from taurank.cache import derived_data
from taurank.cache import instance_cache
from taurank.modules.constructions import projective


class Counter:

    def __init__(self):
        self.calls = 0

    @instance_cache()
    def value(self, arg=None):
        self.calls += 1
        return arg


def test_instance_cache():
    counter = Counter()
    assert counter.value('x') == 'x'
    assert counter.value('x') == 'x'
    assert counter.calls == 1
    assert counter.value('y') == 'y'
    assert counter.calls == 2
    assert counter.value(arg='x') == 'x'
    assert counter.calls == 3


def test_derived_data():
    counter = Counter()
    assert derived_data(counter) == {}
    counter.value(1)
    assert derived_data(counter) == {
        'Counter.value': {((1, ), frozenset()): 1}
    }


def test_derived_data_lives_on_the_instance():
    first = Counter()
    second = Counter()
    first.value()
    second.value()
    assert first.calls == second.calls == 1
    derived_data(first).clear()
    first.value()
    assert first.calls == 2


def test_projectives_are_cached_per_algebra(alg_b, alg_b0):
    assert projective(alg_b, 1) is projective(alg_b, 1)
    assert projective(alg_b, 1) is not projective(alg_b0, 1)
    assert ((1, ), frozenset()) in derived_data(alg_b)['projective']
    derived_data(alg_b).clear()
    assert projective(alg_b, 1).dims == (1, 1, 0)
