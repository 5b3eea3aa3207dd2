import threading

from common.parallel import ordered_map


def test_inline_map():
    assert ordered_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]
    assert ordered_map(str, []) == []


def test_threaded_map_keeps_input_order():
    seen = set()

    def work(x):
        seen.add(threading.get_ident())
        return -x

    assert ordered_map(work, range(50), threads=4) == [-x for x in range(50)]
    assert seen
