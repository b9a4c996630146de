import pytest

from hosoya.caterpillar import CaterpillarBondSpec, expand_spec, z_fast
from hosoya.multigraph import cycle_graph, hosoya_index, matching_counts
from hosoya.sequences import (
    FAMILIES,
    RecurrenceDef,
    bond_graph_spec,
    get_family,
    seeded_spec,
    spec_for_term,
    terms,
    uniform_spec,
)

from oracles import lucas

JACOBSTHAL = [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683, 1365, 2731, 5461, 10923, 21845, 43691, 87381, 174763]


def test_jacobsthal_terms():
    assert terms(RecurrenceDef(1, 2, 0, 1), 12) == JACOBSTHAL[:12]


def test_lucas_spot_values():
    L = terms(RecurrenceDef(1, 1, 2, 1), 5)
    assert (L[2], L[3], L[4]) == (3, 4, 7)


def test_pell_lucas_labelled_from_one():
    q = FAMILIES["pell-lucas"]
    assert (q.value(3), q.value(4), q.value(5)) == (6, 14, 34)
    assert q.labelled_terms(3) == [(1, 2), (2, 2), (3, 6)]


def test_terms_requires_count():
    with pytest.raises(ValueError):
        terms(RecurrenceDef(1, 1, 0, 1), 0)


@pytest.mark.parametrize("kwargs", [dict(a=0, b=1, u0=0, u1=1), dict(a=1, b=1, u0=0, u1=0), dict(a=1, b=1, u0=-1, u1=1)])
def test_recurrence_validation(kwargs):
    with pytest.raises(ValueError):
        RecurrenceDef(**kwargs)


class TestBondGraphs:
    def test_b0(self):
        s = bond_graph_spec(0)
        assert s == CaterpillarBondSpec((1,))
        assert z_fast(s) == 1

    def test_b3(self):
        assert z_fast(bond_graph_spec(3)) == 11

    def test_b10(self):
        assert z_fast(bond_graph_spec(10)) == 1365

    @pytest.mark.parametrize("n", range(0, 31))
    def test_jacobsthal(self, n):
        assert z_fast(bond_graph_spec(n)) == terms(RecurrenceDef(1, 2, 0, 1), n + 3)[-1]

    @pytest.mark.parametrize("n", range(0, 9))
    def test_jacobsthal_oracle(self, n):
        assert sum(matching_counts(expand_spec(bond_graph_spec(n)))) == JACOBSTHAL[n + 2]


class TestCorollaries:
    def test_uniform_examples(self):
        assert z_fast(uniform_spec(2, 1, 3)) == 12
        assert z_fast(uniform_spec(1, 1, 4)) == 5
        assert z_fast(uniform_spec(1, 2, 4)) == 11

    def test_seeded_examples(self):
        s = seeded_spec(2, 1, 1, 1, 4)
        assert s == CaterpillarBondSpec((1, 1, 1, 1), (2, 1, 1))
        assert z_fast(s) == 7
        s = seeded_spec(2, 2, 2, 1, 4)
        assert s == CaterpillarBondSpec((2, 2, 2, 2), (2, 1, 1))
        assert z_fast(s) == 34

    def test_seeded_rejects_zero_seed(self):
        with pytest.raises(ValueError):
            seeded_spec(0, 1, 1, 1, 4)

    def test_uniform_grid(self):
        for a in range(1, 5):
            for b in range(1, 5):
                u = terms(RecurrenceDef(a, b, 0, 1), 12)
                for n in range(1, 11):
                    assert z_fast(uniform_spec(a, b, n)) == u[n + 1]

    def test_seeded_grid(self):
        for a in range(1, 5):
            for b in range(1, 5):
                for v0 in range(1, 4):
                    for v1 in range(1, 4):
                        v = terms(RecurrenceDef(a, b, v0, v1), 11)
                        for n in range(2, 11):
                            assert z_fast(seeded_spec(v0, v1, a, b, n)) == v[n]


class TestNamedIdentities:
    @pytest.mark.parametrize("n", range(1, 21))
    def test_fibonacci(self, n):
        F = terms(FAMILIES["fibonacci"].recurrence, n + 2)
        assert z_fast(CaterpillarBondSpec((1,) * n, (1,) * (n - 1))) == F[n + 1]

    @pytest.mark.parametrize("n", range(2, 21))
    def test_lucas(self, n):
        L = terms(FAMILIES["lucas"].recurrence, n + 1)
        assert z_fast(CaterpillarBondSpec((1,) * n, (2,) + (1,) * (n - 2))) == L[n]

    @pytest.mark.parametrize("n", range(1, 21))
    def test_pell(self, n):
        P = terms(FAMILIES["pell"].recurrence, n + 2)
        assert z_fast(CaterpillarBondSpec((2,) * n, (1,) * (n - 1))) == P[n + 1]

    @pytest.mark.parametrize("n", range(2, 21))
    def test_pell_lucas(self, n):
        assert z_fast(CaterpillarBondSpec((2,) * n, (2,) + (1,) * (n - 2))) == FAMILIES["pell-lucas"].value(n + 1)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_jacobsthal(self, n):
        J = terms(FAMILIES["jacobsthal"].recurrence, n + 2)
        assert z_fast(CaterpillarBondSpec((1,) * n, (2,) * (n - 1))) == J[n + 1]

    @pytest.mark.parametrize("n", range(3, 13))
    def test_cycle_is_lucas(self, n):
        assert hosoya_index(cycle_graph(n)) == terms(FAMILIES["lucas"].recurrence, n + 1)[n] == lucas(n)


class TestTermGraphs:
    @pytest.mark.parametrize("name", sorted(FAMILIES))
    def test_every_term_realised(self, name):
        fam = FAMILIES[name]
        for label, value in fam.labelled_terms(15):
            spec = fam.spec(label)
            if value == 0:
                assert spec is None
            else:
                assert z_fast(spec) == value

    def test_custom_family(self):
        fam = get_family("custom(3,2,0,4)")
        assert fam.recurrence == RecurrenceDef(3, 2, 0, 4)
        for index, value in enumerate(terms(fam.recurrence, 10)):
            spec = spec_for_term(fam.recurrence, index)
            assert (spec is None) if value == 0 else z_fast(spec) == value

    def test_pell_lucas_graph_label(self):
        assert FAMILIES["pell-lucas"].spec(5) == CaterpillarBondSpec((2, 2, 2, 2), (2, 1, 1))

    def test_unknown_family(self):
        with pytest.raises(KeyError):
            get_family("tribonacci")
