from concurrent.futures import ThreadPoolExecutor

from verspec.chow import projective_space
from verspec.ring.ring import _normal_form
from verspec.util import caching
from verspec.util.caching import lru_cache


def fib(n):
    if n in (1, 2):
        return 1
    else:
        return fib(n - 2) + fib(n - 1)


@lru_cache
def fib2(n):
    if n in (1, 2):
        return 1
    else:
        return fib2(n - 2) + fib2(n - 1)


def test_lru():
    fib2.cache_clear()
    assert fib2(60) == 1548008755920
    assert fib2.cache_info()["misses"] == 60
    assert fib(20) == fib2(20)


def test_spaces_are_shared():
    assert projective_space(3) is projective_space(3)


def test_normal_forms_are_cached():
    H = projective_space(2).hyperplane
    (1 + H) ** 2
    before = _normal_form.cache_info()["hits"]
    (1 + H) ** 2
    assert _normal_form.cache_info()["hits"] > before


def test_shared_between_threads(monkeypatch):
    monkeypatch.setattr(caching, "_max_size", 8)

    @lru_cache
    def square(x):
        return x * x

    def work(offset):
        return [square((offset + i) % 50) for i in range(500)]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(work, range(8)))

    for offset, values in enumerate(results):
        assert values == [((offset + i) % 50) ** 2 for i in range(500)]
    info = square.cache_info()
    assert info["hits"] + info["misses"] == 8 * 500
    assert info["size"] <= 8


if __name__ == '__main__':

    from verspec.tests import Timer

    with Timer(text="fib: {:0.4f}s"):
        print(fib(30))
    with Timer(text="fib2: {:0.4f}s"):
        print(fib2(30))
