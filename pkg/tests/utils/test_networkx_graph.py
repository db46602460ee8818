# tests/utils/test_networkx_graph.py

import json

import networkx as nx
import pytest

from tilerscope.utils import solids
from tilerscope.utils.networkx_graph import (
    build_facet_graph,
    build_graph_from_schema,
    graph_to_json,
    polyhedron_schema,
    sanitize_for_graphml,
)


@pytest.fixture(scope="module")
def cube_graph():
    vertices, facets = solids.unit_cube()
    return build_graph_from_schema(polyhedron_schema(vertices, facets))


def test_schema_lists_every_facet_side():
    vertices, facets = solids.regular_tetrahedron()
    schema = polyhedron_schema(vertices, facets)
    assert len(schema["nodes"]) == 4
    assert len(schema["edges"]) == 12
    assert schema["nodes"][0] == {"id": 0, "position": [1.0, 1.0, 1.0]}


def test_shared_sides_fold_into_one_edge(cube_graph):
    assert cube_graph.number_of_nodes() == 8
    assert cube_graph.number_of_edges() == 12
    assert all(len(attrs["facets"]) == 2 for _, _, attrs in cube_graph.edges(data=True))
    assert sorted(cube_graph.edges[0, 1]["facets"]) == [2, 4]


def test_facet_graph(cube_graph):
    dual = build_facet_graph(cube_graph)
    assert dual.number_of_nodes() == 6
    assert dual.number_of_edges() == 12
    assert not dual.has_edge(0, 1)
    assert dual.edges[2, 4]["edge"] == (0, 1)


def test_graph_to_json(cube_graph):
    out = graph_to_json(cube_graph)
    assert out["0"]["neighbours"] == [1, 2, 4]
    assert out["7"]["valence"] == 3
    json.dumps(out)


def test_graphml_round_trip(cube_graph, tmp_path):
    path = tmp_path / "cube.graphml"
    nx.write_graphml(sanitize_for_graphml(cube_graph), path)
    loaded = nx.read_graphml(path)
    assert loaded.number_of_edges() == 12
    assert json.loads(loaded.nodes["7"]["position"]) == [1.0, 1.0, 1.0]
    # the original graph keeps its lists
    assert isinstance(cube_graph.nodes[7]["position"], list)
