from blowdown.verify import (PROPERTIES, VerificationReport, check_pair_properties,
                             coprime_pairs, verify_range)


def test_coprime_pairs_count():
    assert list(coprime_pairs(2, 4)) == [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


def test_example_pair_passes_everything():
    assert all(check_pair_properties(9, 2).values())
    assert all(check_pair_properties(2, 1).values())


def test_counts_sum_to_pairs():
    report = verify_range(20)
    n = sum(1 for _ in coprime_pairs(2, 20))
    assert report.pairs == n
    for name in PROPERTIES:
        assert report.passed[name] + report.failed[name] == n
    assert report.ok


def test_parallel_matches_serial():
    serial = verify_range(25, p_min=3)
    parallel = verify_range(25, p_min=3, parallel=3)
    for field in ('p_min', 'p_max', 'pairs', 'passed', 'failed', 'first_failure'):
        assert getattr(serial, field) == getattr(parallel, field)


def test_merge_is_order_independent():
    a = VerificationReport(2, 5)
    b = VerificationReport(6, 9)
    a.add(3, 1, {name: name != 'reversal' for name in PROPERTIES})
    b.add(7, 2, {name: name != 'reversal' for name in PROPERTIES})
    b.add(2, 1, dict.fromkeys(PROPERTIES, True))
    ab, ba = a.merge(b), b.merge(a)
    assert (ab.pairs, ab.passed, ab.failed, ab.first_failure) == \
        (ba.pairs, ba.passed, ba.failed, ba.first_failure)
    assert ab.first_failure == {'reversal': (3, 1)}
    assert not ab.ok


def test_verify_up_to_300_all_pass():
    report = verify_range(300)
    assert report.ok, report.summary()
    assert report.pairs == 27397
