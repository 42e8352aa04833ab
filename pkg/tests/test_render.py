import re
import xml.etree.ElementTree as ET

import pytest

from rowembed.caterpillar import construct_diagonal_embedding
from rowembed.embedding import Embedding, EmbeddingError
from rowembed.graph import complete_graph, path_graph, star_graph
from rowembed.partition import PartitionInstance, build_paddle_tree, partition_witness
from rowembed.products import HostSpec
from rowembed.render import RenderSpec, render_svg

NS = "{http://www.w3.org/2000/svg}"


def parts(svg):
    root = ET.fromstring(svg)
    nodes = [c for c in root.iter(NS + "circle") if c.get("class") == "node"]
    edges = [e for e in root.iter(NS + "line") if e.get("class") == "edge"]
    return root, nodes, edges


def k4():
    return Embedding(complete_graph(4), HostSpec.path(2, 2), ((0, 0), (0, 1), (1, 0), (1, 1)))


def test_k4_block():
    _, nodes, edges = parts(render_svg(k4()))
    assert len(nodes) == 4 and len(edges) == 6


def test_deterministic():
    assert render_svg(k4()) == render_svg(k4())


def test_diagonals_dashed():
    svg = render_svg(k4())
    assert svg.count("stroke-dasharray") == 2


def test_star_construction():
    emb = construct_diagonal_embedding(star_graph(8))
    _, nodes, edges = parts(render_svg(emb, RenderSpec(cell_size=10)))
    assert len(nodes) == 9 and len(edges) == 8
    center = nodes[0]
    assert (center.get("cx"), center.get("cy")) == ("20.0", "20.0")


def test_paddle_strips():
    t = build_paddle_tree(PartitionInstance((8, 16, 24), 1))
    svg = render_svg(partition_witness(t, [[0, 1, 2]]), RenderSpec(cell_size=4, max_host_cells=0))
    _, nodes, _ = parts(svg)
    strips = {n.get("cy") for n in nodes}
    assert len(strips) == 1 + t.star_leaves
    assert 'class="cell"' not in svg


def test_role_colors():
    g = path_graph(2)
    g.vtag[0] = "anchor:c"
    emb = Embedding(g, HostSpec.path(1, 2), ((0, 0), (0, 1)))
    svg = render_svg(emb, RenderSpec(role_colors={"anchor": "#123456"}))
    assert "#123456" in svg


def test_refuses_invalid():
    emb = Embedding(path_graph(2), HostSpec.path(3, 3), ((0, 0), (2, 2)))
    with pytest.raises(EmbeddingError):
        render_svg(emb)


@pytest.mark.parametrize("kwargs", [dict(cell_size=0), dict(host_layout="spiral")])
def test_bad_spec(kwargs):
    with pytest.raises(ValueError):
        RenderSpec(**kwargs)


def test_caterpillar_rows_layout():
    host = HostSpec.caterpillar(2, 1, 2)
    emb = Embedding(path_graph(2), host, ((0, 0), (2, 0)))
    svg = render_svg(emb, RenderSpec(cell_size=10))
    ys = re.findall(r'class="node" cx="[\d.]+" cy="([\d.]+)"', svg)
    assert ys == ["10.0", "20.0"]
