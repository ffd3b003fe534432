from __future__ import annotations

import pytest

from gwcount import (
    CacheFormatError,
    CacheIntegrityError,
    CacheStore,
    CodimVector,
    ComplexEvalContext,
    ComplexKey,
    RealEvalContext,
    RealKey,
    eval_complex,
    eval_real,
)
from gwcount.cache import HEADER


def _ckey(N, d, *cs):
    return ComplexKey(N=N, d=d, insertions=CodimVector.of(*cs))


def _rkey(n, d, *cs, phi="tau"):
    return RealKey(n=n, d=d, insertions=CodimVector.of(*cs), phi=phi)


def test_insert_lookup_roundtrip():
    store = CacheStore()
    store.insert(_ckey(3, 3, 3, 3, 3, 3, 3, 3), 1)
    store.insert(_rkey(2, 3, 3, 3, 3), -1)
    assert store.lookup(_ckey(3, 3, 3, 3, 3, 3, 3, 3)) == 1
    assert store.lookup(_rkey(2, 3, 3, 3, 3)) == -1
    assert store.lookup(_ckey(3, 1, 3, 3)) is None
    assert len(store) == 2


def test_insert_is_idempotent_but_conflicts_raise():
    store = CacheStore()
    key = _rkey(2, 3, 3, 3, 3)
    store.insert(key, -1)
    store.insert(key, -1)
    assert len(store) == 1
    with pytest.raises(CacheIntegrityError):
        store.insert(key, 7)


def test_phi_variants_share_a_record():
    store = CacheStore()
    store.insert(_rkey(2, 3, 3, 3, 3, phi="tau"), -1)
    assert store.lookup(_rkey(2, 3, 3, 3, 3, phi="eta")) == -1


def test_save_load_roundtrip_is_byte_identical(tmp_path):
    store = CacheStore()
    store.insert(_ckey(3, 3, 3, 3, 3, 3, 3, 3), 1)
    store.insert(_ckey(3, 1, 3, 3), 1)
    store.insert(_ckey(5, 1, 2, 4, 5), 1)
    store.insert(_rkey(2, 3, 3, 3, 3), -1)
    store.insert(_rkey(3, 3, 3, 5, 5), -1)
    path = tmp_path / "cache.txt"
    store.save(path)
    text = path.read_text()
    assert text.startswith(HEADER + "\n")
    loaded = CacheStore.load(path)
    assert loaded.records == store.records
    path2 = tmp_path / "cache2.txt"
    loaded.save(path2)
    assert path2.read_text() == text


def test_records_are_sorted_deterministically(tmp_path):
    store = CacheStore()
    store.insert(_rkey(2, 5, 3, 3, 3, 3, 3), 5)
    store.insert(_ckey(5, 1, 2, 4, 5), 1)
    store.insert(_ckey(3, 2, 3, 3, 3, 3), 0)
    store.insert(_ckey(3, 1, 3, 3), 1)
    lines = store.render().splitlines()
    assert lines[0] == HEADER
    assert lines[1:] == [
        "gw1|C|N=3|d=1|c=3,3|v=1",
        "gw1|C|N=3|d=2|c=3,3,3,3|v=0",
        "gw1|C|N=5|d=1|c=2,4,5|v=1",
        "gw1|R|n=2|d=5|c=3,3,3,3,3|v=5",
    ]


def test_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("#gw-cache v2\n")
    with pytest.raises(CacheFormatError):
        CacheStore.load(path)
    path.write_text("")
    with pytest.raises(CacheFormatError):
        CacheStore.load(path)


def test_load_rejects_malformed_lines(tmp_path):
    path = tmp_path / "bad.txt"
    for line in (
        "gw1|C|N=3|d=1|c=3,3",
        "gw2|C|N=3|d=1|c=3,3|v=1",
        "gw1|X|N=3|d=1|c=3,3|v=1",
        "gw1|C|n=3|d=1|c=3,3|v=1",
        "gw1|C|N=3|d=1|c=3,2|v=1",
        "gw1|C|N=3|d=1|c=3,3|v=q",
        "gw1|C|N=3|d=one|c=3,3|v=1",
    ):
        path.write_text(HEADER + "\n" + line + "\n")
        with pytest.raises(CacheFormatError):
            CacheStore.load(path)


def test_load_rejects_conflicting_records(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(
        HEADER + "\n"
        + "gw1|C|N=3|d=1|c=3,3|v=1\n"
        + "gw1|C|N=3|d=1|c=3,3|v=2\n"
    )
    with pytest.raises(CacheIntegrityError):
        CacheStore.load(path)


def test_large_roundtrip(tmp_path):
    store = CacheStore()
    count = 0
    for N in (3, 5, 7, 9):
        for d in range(1, 26):
            for k in range(1, 101):
                store._insert_record(("C", N, d, (2, 3, k + 3)), (-k) ** d + N)
                count += 1
    assert count == 10000
    path = tmp_path / "big.txt"
    store.save(path)
    loaded = CacheStore.load(path)
    assert loaded.records == store.records
    assert loaded.stats() == {"records": 10000, "complex": 10000, "real": 0}


def test_warm_and_absorb_regenerate_memos():
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    value = eval_real(_rkey(2, 5, 3, 3, 3, 3, 3), rctx)
    assert value == 5
    store = CacheStore()
    store.absorb(cctx, rctx)
    assert len(store) == len(cctx.memo) + len(rctx.memo) > 0

    cctx2 = ComplexEvalContext()
    rctx2 = RealEvalContext(cctx2)
    store.warm(cctx2, rctx2)
    assert cctx2.memo == cctx.memo
    assert rctx2.memo == rctx.memo
    # warmed evaluation is a pure memo hit and agrees with the cold run
    assert eval_real(_rkey(2, 5, 3, 3, 3, 3, 3), rctx2) == value
    assert rctx2.deep_evals == 0


def test_warm_cache_cannot_change_results(tmp_path):
    # save, reload, recompute: identical values as from scratch
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    cold = [eval_real(_rkey(2, d, *([3] * d)), rctx) for d in (1, 3, 5, 7)]
    store = CacheStore()
    store.absorb(cctx, rctx)
    path = tmp_path / "cache.txt"
    store.save(path)

    warmed = CacheStore.load(path)
    cctx2 = ComplexEvalContext()
    rctx2 = RealEvalContext(cctx2)
    warmed.warm(cctx2, rctx2)
    warm = [eval_real(_rkey(2, d, *([3] * d)), rctx2) for d in (1, 3, 5, 7)]
    assert warm == cold


def test_absorb_detects_engine_cache_conflicts():
    cctx = ComplexEvalContext()
    eval_complex(_ckey(3, 3, 3, 3, 3, 3, 3, 3), cctx)
    store = CacheStore()
    store.absorb(cctx)
    # corrupt one stored value, then absorbing the honest memo must fail
    rkey = next(iter(store.records))
    store.records[rkey] += 1
    with pytest.raises(CacheIntegrityError):
        store.absorb(cctx)
