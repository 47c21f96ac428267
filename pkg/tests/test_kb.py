import pytest

from hmknf import Atom, Conflict, HeadCut, KnowledgeBase, Partition, Rule, applicable, ka_of, partition_join


def test_rule_needs_a_head():
    with pytest.raises(ValueError):
        Rule(frozenset(), frozenset([1]), frozenset())


def test_partition_rejects_overlap():
    with pytest.raises(ValueError):
        Partition(frozenset([1, 2]), frozenset([2]))


def test_partition_order():
    small = Partition(frozenset([1]), frozenset())
    big = Partition(frozenset([1, 3]), frozenset([2]))
    assert small.leq(big)
    assert not big.leq(small)
    assert big.is_total({1, 2, 3})
    assert not small.is_total({1, 2, 3})


def test_join():
    p = Partition(frozenset([1]), frozenset([2]))
    q = Partition(frozenset([3]), frozenset())
    assert partition_join(p, q) == Partition(frozenset([1, 3]), frozenset([2]))
    clash = partition_join(p, Partition(frozenset([2]), frozenset()))
    assert isinstance(clash, Conflict)
    assert clash.atoms == frozenset([2])
    assert not clash


def test_applicable():
    r = Rule(frozenset([0]), frozenset([1]), frozenset([2]))
    assert applicable(r, Partition(frozenset([1]), frozenset([2])))
    assert not applicable(r, Partition(frozenset([1]), frozenset()))
    assert not applicable(r, Partition(frozenset(), frozenset([2])))


def test_ka_covers_heads_and_both_bodies():
    rules = [Rule(frozenset([0]), frozenset([1]), frozenset()), Rule(frozenset([2]), frozenset(), frozenset([3]))]
    assert ka_of(rules) == {0, 1, 2, 3}


def test_from_names_puts_rule_atoms_first():
    kb = KnowledgeBase.from_names([(["a"], ["b"], ["c"])], [["-a", "x"]])
    assert [a.name for a in kb.atoms] == ["a", "b", "c", "x"]
    assert kb.ka == {0, 1, 2}
    assert kb.is_normal


def test_knowledge_base_validates_atom_table():
    with pytest.raises(ValueError):
        KnowledgeBase((), KnowledgeBase.from_names().ontology, (Atom(1, "a"),))
    with pytest.raises(ValueError):
        KnowledgeBase.from_names([(["Bad"], [], [])])
    with pytest.raises(ValueError):
        KnowledgeBase.from_names([(["not"], [], [])])


def test_unknown_name():
    kb = KnowledgeBase.from_names([(["a"], [], [])])
    with pytest.raises(KeyError):
        kb.id_of("zz")


def test_headcut_at_most_one_pair_per_rule():
    with pytest.raises(ValueError):
        HeadCut(frozenset([(0, 1), (0, 2)]))
    assert HeadCut(frozenset([(0, 1), (0, 2)]), weak=True).heads == {1, 2}


def test_headcut_validate():
    kb = KnowledgeBase.from_names([(["a", "b"], [], [])])
    HeadCut(frozenset([(0, kb.id_of("b"))])).validate(kb)
    with pytest.raises(ValueError):
        HeadCut(frozenset([(1, 0)])).validate(kb)


def test_canonical_ignores_ids():
    one = KnowledgeBase.from_names([(["a"], ["b"], [])], [["a", "-b"]])
    two = KnowledgeBase.from_names([(["a"], ["b"], [])], [["-b", "a"]])
    assert one.canonical() == two.canonical()
