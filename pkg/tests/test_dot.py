import re

from selfsim import catalog as cat
from selfsim.dot import export_dot
from selfsim.gdata import realize, theorem_c_family
from selfsim.treecore import identity


def nodes(text):
    return re.findall(r'^  "([^"]+)" \[shape=', text, re.M)


def edges(text):
    return re.findall(r'^  "([^"]+)" -> "([^"]+)" \[label="([^"]+)"\];', text, re.M)


def test_double_adding_diagram(double_adding):
    text = export_dot(double_adding)
    assert nodes(text) == ["a", "e"]
    es = edges(text)
    assert ("a", "e", "1|2,3|4") in es
    assert ("a", "a", "2|1,4|3") in es


def test_identity_diagram():
    text = export_dot(identity(3))
    assert nodes(text) == ["e"]
    assert edges(text) == [("e", "e", "1|1,2|2,3|3")]
    # unmerged: one self-loop per letter
    assert len(edges(export_dot(identity(3), merge=False))) == 3


def test_family_diagram():
    text = export_dot(realize(theorem_c_family(2), 3))
    assert sorted(nodes(text)) == ["alpha_1", "alpha_2", "alpha_3", "e"]
    es = edges(text)
    assert ("alpha_3", "alpha_2", "1|1,2|2") in es
    assert ("alpha_2", "alpha_1", "3|3") in es


def test_deterministic_and_unmerged_counts():
    gens = cat.theorem_c(2, 4).generators
    assert export_dot(gens) == export_dot(gens)
    text = export_dot(gens, merge=False)
    assert len(edges(text)) == 3 * len(nodes(text))
