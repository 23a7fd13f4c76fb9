import pytest

import leafkernel as lk


def triangle():
    return lk.Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_parse_and_serialize_round_trip():
    inst = lk.parse_instance("p nsis 3 3 1\ne 0 1\ne 1 2\ne 2 0\n")
    assert inst.problem == "nsis"
    assert inst.parameter == 1
    assert inst.graph == triangle()
    assert lk.parse_instance(lk.serialize_instance(inst)).graph == inst.graph


def test_format_error_is_value_error():
    with pytest.raises(ValueError, match="line 2"):
        lk.parse_instance("p nsis 2 1 1\ne 0 0\n")


def test_oracles():
    c4 = lk.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert lk.max_nsis(c4)[0] == 1
    assert lk.min_cvc(c4)[0] == 3
    assert lk.max_leaf(lk.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))[0] == 3


def test_kernelize_triangle_and_verify():
    out = lk.kernelize(lk.Instance(triangle(), "nsis", 1), "nsis-9k")
    assert out["decided"] == "yes"
    assert lk.verify_certificate(triangle(), out["certificate"], 1)


@pytest.mark.parametrize("pipeline", ["nsis-9k", "nsis-12k", "maxleaf-5k"])
def test_pipelines_on_generated_planar(pipeline):
    problem = "maxleaf" if pipeline == "maxleaf-5k" else "nsis"
    for seed in range(5):
        inst = lk.generate("planar", "200", seed, problem)
        out = lk.kernelize(inst, pipeline)
        if out["decided"] == "yes":
            assert lk.verify_certificate(inst.graph, out["certificate"], inst.parameter)
        elif out["decided"] is None:
            reduced = out["reduced"]
            assert reduced.graph.order < out["bound"] * reduced.parameter


def test_tree_and_leaf_graph():
    g = lk.generate("hub3", "2").graph
    tree = lk.build_spanning_tree(g, "branching")
    assert len(tree["parent_of"]) == g.order - 1
    assert 4 * len(tree["leaves"]) >= g.order
    indep, cycles = lk.independent_set_with_cycles(lk.generate("triangles", "4").graph)
    assert len(indep) == 4 and len(cycles) == 4
    assert not lk.is_outerplanar(lk.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))


def test_reducers():
    p3 = lk.Instance(lk.Graph(3, [(0, 1), (1, 2)]), "nsis", 2)
    r = lk.reduce_dual_separator_exhaustive(p3)
    assert r["decided"] is None
    assert r["instance"].graph.order == 2
    assert r["instance"].parameter == 1
    assert lk.reduce_maxleaf(lk.Instance(lk.Graph(2, [(0, 1)]), "maxleaf", 3))["decided"] == "no"
