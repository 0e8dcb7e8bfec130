import itertools

import pytest

from rootseq.arquiver import (
    ARQuiver,
    DynkinQuiver,
    NotASink,
    all_orientations,
    build_ar_quiver,
    coxeter_word,
    find_quiver,
    gamma,
    height_function,
    is_adapted,
    reflect_ar,
    structure_report,
    theta,
)
from rootseq.cli import diff_fixture, load_fixture
from rootseq.rootsys import UnsupportedType, build_root_system, height
from rootseq.words import heap_of, roots_of_word

from conftest import word_from_root_order

# golden readings for the A5 quiver 1>2, 3>2, 3>4, 4>5
A5_Q = ((1, 2), (3, 2), (3, 4), (4, 5))
A5_READINGS = [
    ["[1]", "[3]", "[1,3]", "[2,3]", "[3,4]", "[1,4]", "[2,4]", "[4]",
     "[3,5]", "[1,5]", "[2,5]", "[4,5]", "[5]", "[1,2]", "[2]"],
    ["[3]", "[3,4]", "[3,5]", "[1]", "[1,3]", "[1,4]", "[1,5]", "[1,2]",
     "[2,3]", "[2,4]", "[2,5]", "[2]", "[4]", "[4,5]", "[5]"],
]

# golden readings for the D4 quiver 3>2, 2>1, 2>4
D4_Q = ((3, 2), (2, 1), (2, 4))
D4_READINGS = [
    ["{3|-4}", "{2|-4}", "{1|-4}", "{2|3}", "{2|-3}", "{1|2}",
     "{2|4}", "{1|-3}", "{1|3}", "{1|4}", "{1|-2}", "{3|4}"],
    ["{3|-4}", "{2|-4}", "{1|-4}", "{2|-3}", "{2|3}", "{1|2}",
     "{2|4}", "{1|3}", "{1|-3}", "{1|4}", "{1|-2}", "{3|4}"],
    ["{3|-4}", "{2|-4}", "{2|-3}", "{2|3}", "{1|-4}", "{1|2}",
     "{1|-3}", "{1|3}", "{2|4}", "{1|4}", "{3|4}", "{1|-2}"],
    ["{3|-4}", "{2|-4}", "{2|3}", "{2|-3}", "{1|-4}", "{1|2}",
     "{1|3}", "{1|-3}", "{2|4}", "{1|4}", "{3|4}", "{1|-2}"],
]


def _quiver(system, arrows):
    return DynkinQuiver.from_arrows(system, arrows)


def NON_ADAPTED_A5(a5):
    """A reduced word of w0 in A5 adapted to no orientation."""
    from rootseq.words import ReducedWord

    return ReducedWord((1, 2, 3, 5, 4, 3, 1, 2, 3, 5, 4, 3, 1, 2, 3), a5)


def test_orientation_must_cover_tree(a5):
    with pytest.raises(ValueError):
        DynkinQuiver.from_arrows(a5, [(1, 2), (2, 1), (3, 4), (4, 5)])
    with pytest.raises(ValueError):
        DynkinQuiver.from_arrows(a5, [(1, 3), (2, 3), (3, 4), (4, 5)])


def test_sources_sinks_reflect(a5):
    Q = _quiver(a5, A5_Q)
    assert Q.sources() == (1, 3)
    assert Q.sinks() == (2, 5)
    R = Q.reflect(2)
    assert 2 in R.sources()
    with pytest.raises(ValueError):
        Q.reflect(4)  # neither source nor sink
    assert Q.rev().rev() == Q
    assert Q.star().star() == Q


def test_all_orientations_count(a5, d4):
    assert len(list(all_orientations(a5))) == 16
    assert len(list(all_orientations(d4))) == 8
    assert len({Q.arrows for Q in all_orientations(d4)}) == 8


def test_coxeter_word_source_to_sink(a5):
    Q = _quiver(a5, A5_Q)
    w = coxeter_word(Q)
    assert sorted(w.letters) == [1, 2, 3, 4, 5]
    pos = {i: k for k, i in enumerate(w.letters)}
    assert all(pos[a] < pos[b] for a, b in Q.arrows)


def test_gamma_theta(a5):
    Q = _quiver(a5, A5_Q)
    assert a5.format_root(gamma(Q, 2)) == "[1,3]"
    assert a5.format_root(gamma(Q, 5)) == "[3,5]"
    assert a5.format_root(theta(Q, 1)) == "[1,2]"
    assert a5.format_root(theta(Q, 3)) == "[2,5]"


def test_height_function_drops_along_arrows(a5):
    Q = _quiver(a5, A5_Q)
    xi = height_function(Q)
    assert all(xi[b] == xi[a] - 1 for a, b in Q.arrows)
    assert xi[min(Q.sources())] == 0


@pytest.mark.parametrize("kind,rank", [("A", 5), ("D", 4), ("D", 5), ("E", 6)])
def test_label_bijection_every_orientation(kind, rank):
    sys_ = build_root_system(kind, rank)
    for Q in all_orientations(sys_):
        arq = build_ar_quiver(Q)
        assert set(arq.label.values()) == set(sys_.positive_roots)
        # rows start at gamma_i and end at theta of the dual vertex
        rows = arq.rows()
        inv = sys_.w0_involution
        for i in range(1, rank + 1):
            assert rows[i][-1] == gamma(Q, i)
            assert rows[i][0] == arq.theta_root(i) == theta(Q, inv[i])
            assert len(rows[i]) == arq.mQ[i] + 1


def test_mq_sum_is_number_of_roots(a5, d4, e6):
    for sys_ in (a5, d4, e6):
        for Q in itertools.islice(all_orientations(sys_), 4):
            arq = build_ar_quiver(Q)
            assert sum(arq.mQ[i] + 1 for i in arq.mQ) == sys_.N


def test_a5_canonical_readings(a5):
    arq = build_ar_quiver(_quiver(a5, A5_Q))
    cls = arq.comm_class()
    for order in A5_READINGS:
        w = word_from_root_order(a5, order)
        assert arq.is_reading(w)
        assert cls.contains(w)
    # a non-adapted word of w0 is not a reading
    assert not arq.is_reading(NON_ADAPTED_A5(a5))


def test_d4_canonical_readings(d4):
    arq = build_ar_quiver(_quiver(d4, D4_Q))
    cls = arq.comm_class()
    for order in D4_READINGS:
        w = word_from_root_order(d4, order)
        assert arq.is_reading(w)
        assert cls.contains(w)


def test_adapted_words_are_the_class(d4):
    arq = build_ar_quiver(_quiver(d4, D4_Q))
    cls = arq.comm_class()
    words = list(arq.adapted_words())
    exts = {w.letters for w in cls.linear_extensions()}
    assert {w.letters for w in words} == exts


def test_find_quiver_roundtrip(a5, d4):
    for sys_ in (a5, d4):
        for Q in all_orientations(sys_):
            cls = build_ar_quiver(Q).comm_class()
            assert find_quiver(cls) == Q


def test_non_adapted_class_has_no_quiver(a5):
    w = NON_ADAPTED_A5(a5)
    assert find_quiver(heap_of(w)) is None
    assert not any(is_adapted(w, Q) for Q in all_orientations(a5))


def test_prec_matches_heap(d4):
    arq = build_ar_quiver(_quiver(d4, D4_Q))
    cls = arq.comm_class()
    for a in d4.positive_roots:
        for b in d4.positive_roots:
            assert arq.prec(a, b) == cls.prec(a, b)


def test_reflect_ar_surgery(a5, d4):
    for sys_, arrows in ((a5, A5_Q), (d4, D4_Q)):
        Q = _quiver(sys_, arrows)
        arq = build_ar_quiver(Q)
        i = Q.sinks()[0]
        fresh = reflect_ar(arq, i)
        assert fresh.quiver == Q.reflect(i)
        with pytest.raises(NotASink):
            reflect_ar(arq, Q.sources()[0])


@pytest.mark.parametrize("name,kind,rank", [("e6", "E", 6), ("e7", "E", 7), ("e8", "E", 8)])
def test_exceptional_grids_match_fixtures(name, kind, rank):
    fx = load_fixture(name)
    assert fx["kind"] == kind and fx["rank"] == rank
    sys_ = build_root_system(kind, rank)
    Q = DynkinQuiver.from_arrows(sys_, fx["arrows"])
    arq = build_ar_quiver(Q)
    assert diff_fixture(fx, arq) == []


def test_structure_report_d4(d4):
    arq = build_ar_quiver(_quiver(d4, D4_Q))
    rep = structure_report(arq)
    # kappa is the residue-1 row read right-to-left, starting at gamma_1
    assert rep.kappa == list(reversed(arq.rows()[1]))
    assert rep.kappa[0] == d4.parse_root("{1|-4}")
    assert len(rep.swings) > 0
    for sw in rep.swings:
        assert len(sw) == len(set(sw))
    with pytest.raises(UnsupportedType):
        structure_report(build_ar_quiver(next(all_orientations(build_root_system("E", 6)))))


def test_to_dot_and_json(d4):
    arq = build_ar_quiver(_quiver(d4, D4_Q))
    dot = arq.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == len(arq.arrows)
    data = arq.to_json()
    assert len(data["vertices"]) == 12
    assert data["orientation"] == _quiver(d4, D4_Q).orientation_str()
