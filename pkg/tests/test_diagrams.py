import random

import pytest

from spincalc.diagrams import (
    OSC,
    SPIN,
    Diagram,
    DiagramMorphism,
    compose,
    hom_dim,
    identity_morphism,
    morphism_from,
    normalize,
    random_raw_diagram,
)


def spin_d(source, target, circled=(), edges=(), through=None):
    return Diagram.make(source, target, circled, edges, through)


class TestDiagramValidation:
    def test_partition_property_enforced(self):
        with pytest.raises(ValueError):
            Diagram((1, 2), (), (1,), ((1, 2),), ())
        with pytest.raises(ValueError):
            Diagram((1, 2), (9,), (1, 2), (), ((2, 9),))

    def test_through_must_cover_target(self):
        with pytest.raises(ValueError):
            Diagram((1,), (7,), (), (), ((1, 8),))


class TestNormalize:
    def test_already_normal(self):
        d = spin_d((1, 2, 3), (3000,), circled=(1, 2), through=((3, 3000),))
        m = normalize(d, SPIN)
        assert m == DiagramMorphism(SPIN, {d: 1})

    def test_spin_swap(self):
        raw = spin_d((1, 2), (), circled=(2, 1))
        sorted_d = spin_d((1, 2), (), circled=(1, 2))
        edge_d = spin_d((1, 2), (), edges=((1, 2),))
        assert normalize(raw, SPIN) == DiagramMorphism(
            SPIN, {sorted_d: -1, edge_d: 1}
        )

    def test_osc_edge_reversal(self):
        raw = spin_d((1, 2), (), edges=((2, 1),))
        oriented = spin_d((1, 2), (), edges=((1, 2),))
        assert normalize(raw, OSC) == DiagramMorphism(OSC, {oriented: -1})
        assert normalize(raw, SPIN) == DiagramMorphism(SPIN, {oriented: 1})

    def test_osc_swap(self):
        raw = spin_d((1, 2), (), circled=(2, 1))
        sorted_d = spin_d((1, 2), (), circled=(1, 2))
        edge_d = spin_d((1, 2), (), edges=((1, 2),))
        # (2,1) = (1,2) + edge 2->1 = (1,2) - edge 1->2
        assert normalize(raw, OSC) == DiagramMorphism(
            OSC, {sorted_d: 1, edge_d: -1}
        )

    def test_clifford_pair_sums_to_edge(self):
        fwd = normalize(spin_d((1, 2), (), circled=(1, 2)), SPIN)
        rev = normalize(spin_d((1, 2), (), circled=(2, 1)), SPIN)
        edge = normalize(spin_d((1, 2), (), edges=((1, 2),)), SPIN)
        assert fwd + rev == edge

    def test_weyl_pair_differences_to_edge(self):
        fwd = normalize(spin_d((1, 2), (), circled=(1, 2)), OSC)
        rev = normalize(spin_d((1, 2), (), circled=(2, 1)), OSC)
        edge = normalize(spin_d((1, 2), (), edges=((1, 2),)), OSC)
        assert fwd + rev.scale(-1) == edge

    def test_confluence_random(self):
        rng = random.Random(2024)
        for flavor in (SPIN, OSC):
            for _ in range(60):
                raw = random_raw_diagram(rng, 6, flavor)
                a = normalize(raw, flavor, random.Random(1))
                b = normalize(raw, flavor, random.Random(99))
                c = normalize(raw, flavor)
                assert a == b == c


class TestCompose:
    def test_identity(self):
        d = spin_d((1, 2, 3), (10, 11), circled=(2,), through=((1, 11), (3, 10)))
        f = normalize(d, SPIN)
        left = compose(identity_morphism((10, 11), SPIN), f)
        right = compose(f, identity_morphism((1, 2, 3), SPIN))
        assert left == f
        assert right == f

    def test_circled_pullback(self):
        # Composing "circle the single target strand" after "pass 1 through,
        # circle 2" yields circled order (2, 1), the Clifford rewrite of it.
        f = normalize(
            spin_d((1, 2), (1,), circled=(2,), through=((1, 1),)), SPIN
        )
        g = normalize(spin_d((1,), (), circled=(1,)), SPIN)
        got = compose(g, f)
        expected = normalize(spin_d((1, 2), (), circled=(2, 1)), SPIN)
        assert got == expected

    def test_label_mismatch_rejected(self):
        f = identity_morphism((1,), SPIN)
        g = identity_morphism((2,), SPIN)
        with pytest.raises(ValueError):
            compose(g, f)

    def test_worked_composite(self):
        # The eleven-vertex composite: a 9->5 diagram followed by a 5->2 one.
        gamma = spin_d(
            tuple(range(1, 10)),
            tuple(range(1, 6)),
            circled=(7, 9),
            edges=((1, 5),),
            through=((3, 1), (2, 2), (4, 3), (8, 4), (6, 5)),
        )
        gamma_p = spin_d(
            tuple(range(1, 6)),
            (1, 2),
            circled=(5,),
            edges=((2, 3),),
            through=((1, 1), (4, 2)),
        )
        got = compose(normalize(gamma_p, SPIN), normalize(gamma, SPIN))
        expected_raw = spin_d(
            tuple(range(1, 10)),
            (1, 2),
            circled=(7, 9, 6),
            edges=((1, 5), (2, 4)),
            through=((3, 1), (8, 2)),
        )
        assert got == normalize(expected_raw, SPIN)

    def test_associativity_random(self):
        rng = random.Random(5)
        trials = 0
        while trials < 200:
            sizes = [rng.randint(0, 5) for _ in range(4)]
            # build a composable chain h: c->d, g: b->c, f: a->b
            f = _random_between(rng, sizes[0], sizes[1])
            g = _random_between(rng, sizes[1], sizes[2])
            h = _random_between(rng, sizes[2], sizes[3])
            if f is None or g is None or h is None:
                continue
            for flavor in (SPIN, OSC):
                mf = normalize(f, flavor)
                mg = normalize(g, flavor)
                mh = normalize(h, flavor)
                lhs = compose(mh, compose(mg, mf))
                rhs = compose(compose(mh, mg), mf)
                assert lhs == rhs
            trials += 1


def _random_between(rng, s, t):
    """Random raw diagram from labels 1..s onto labels 1..t, or None."""
    extra = s - t
    if extra < 0:
        return None
    labels = list(range(1, s + 1))
    rng.shuffle(labels)
    n_circ = rng.randint(0, extra)
    if (extra - n_circ) % 2:
        if n_circ + 1 > extra:
            return None
        n_circ += 1
    circled = tuple(labels[:n_circ])
    rest = labels[n_circ:]
    n_edge = (extra - n_circ) // 2
    edges = tuple((rest[2 * i], rest[2 * i + 1]) for i in range(n_edge))
    through_src = rest[2 * n_edge :]
    targets = list(range(1, t + 1))
    rng.shuffle(targets)
    return Diagram.make(
        tuple(range(1, s + 1)),
        tuple(range(1, t + 1)),
        circled,
        edges,
        tuple(zip(through_src, targets)),
    )


class TestHomDim:
    def test_examples(self):
        assert hom_dim(0, 0) == 1
        assert hom_dim(2, 0) == 2
        assert hom_dim(1, 1) == 1

    def test_flavors_coincide(self):
        for s in range(7):
            for t in range(7):
                assert hom_dim(s, t, SPIN) == hom_dim(s, t, OSC)

    def test_against_brute_enumeration(self):
        import math

        for s in range(5):
            for t in range(s + 1):
                count = 0
                labels = list(range(1, s + 1))
                for circ in _subsets(labels):
                    rest = [x for x in labels if x not in circ]
                    for matching in _perfect_matchings_of_subsets(rest, t):
                        remaining = [
                            x for x in rest if all(x not in e for e in matching)
                        ]
                        assert len(remaining) == t
                        count += math.factorial(t)
                assert count == hom_dim(s, t), (s, t)


def _subsets(labels):
    import itertools

    for r in range(len(labels) + 1):
        yield from itertools.combinations(labels, r)


def _perfect_matchings_of_subsets(labels, keep):
    """All matchings on `labels` leaving exactly `keep` labels unmatched."""
    need = len(labels) - keep
    if need < 0 or need % 2:
        return
    yield from _matchings(tuple(labels), need // 2)


def _matchings(labels, pairs):
    if pairs == 0:
        yield ()
        return
    if len(labels) < 2 * pairs:
        return
    first = labels[0]
    # first left unmatched
    yield from _matchings(labels[1:], pairs)
    # first matched with each later label
    for i in range(1, len(labels)):
        rest = labels[1:i] + labels[i + 1 :]
        for sub in _matchings(rest, pairs - 1):
            yield ((first, labels[i]),) + sub
