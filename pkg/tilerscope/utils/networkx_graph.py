import json
import networkx as nx
from networkx import Graph


def polyhedron_schema(vertices, facets) -> dict:
    """
    Flatten a polyhedron into the node/edge schema consumed by
    ``build_graph_from_schema``.

    Nodes are vertex indices carrying their coordinates; every facet side
    becomes one edge record with relation ``"bounds"`` and the facet index.
    An edge shared by two facets shows up twice and the builder folds the
    facet indices together.
    """
    nodes = [
        {"id": idx, "position": [float(c) for c in point]}
        for idx, point in enumerate(vertices)
    ]
    edges = []
    for facet_index, cycle in enumerate(facets):
        for pos, start in enumerate(cycle):
            end = cycle[(pos + 1) % len(cycle)]
            edges.append({"from": start, "to": end, "relation": "bounds", "facet": facet_index})
    return {"nodes": nodes, "edges": edges}


def build_graph_from_schema(schema) -> Graph:
    G = nx.Graph()

    for node in schema["nodes"]:
        nid = node["id"]
        attrs = {}
        for (k, v) in node.items():
            if k == "id":
                continue
            attrs[k] = v
        G.add_node(nid, **attrs)

    for edge in schema["edges"]:
        src = edge["from"]
        dst = edge["to"]
        facet = edge.get("facet")
        if G.has_edge(src, dst):
            G.edges[src, dst]["facets"].append(facet)
        else:
            G.add_edge(src, dst, relation=edge.get("relation") or "", facets=[facet])

    return G


def build_facet_graph(G: Graph) -> Graph:
    """Dual graph: facets are nodes, adjacent when they share a polyhedron edge."""
    dual = nx.Graph()
    for u, v, attrs in G.edges(data=True):
        facets = attrs.get("facets", [])
        for facet in facets:
            dual.add_node(facet)
        if len(facets) == 2:
            a, b = sorted(facets)
            dual.add_edge(a, b, edge=(min(u, v), max(u, v)))
    return dual


def graph_to_json(G: Graph) -> dict:
    out = {}
    for node in sorted(G.nodes()):
        out[str(node)] = {
            "neighbours": sorted(G.neighbors(node)),
            "valence": G.degree(node),
            "position": G.nodes[node].get("position", []),
        }
    return out


def sanitize_for_graphml(G: Graph) -> Graph:
    H = G.copy()
    for n, attrs in H.nodes(data=True):
        for k, v in list(attrs.items()):
            if isinstance(v, list):
                attrs[k] = json.dumps(v)
    for u, v, attrs in H.edges(data=True):
        for k, val in list(attrs.items()):
            if isinstance(val, (list, tuple)):
                attrs[k] = json.dumps(list(val))
    return H
