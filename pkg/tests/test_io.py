import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from upkernel import io
from upkernel import constructors as cons
from upkernel.digraph import ColoredDigraph
from upkernel.errors import DocumentError, RecipeError

from conftest import digraphs


def test_serialization_field_order():
    doc = io.GraphDocument("p", (("a", 1), ("b", 0)), (("a", "b"),))
    text = io.serialize_document(doc)
    assert text.index('"name"') < text.index('"vertices"') < \
        text.index('"arcs"')
    assert '{"id": "a", "color": 1}' in text
    assert io.parse_document(text) == doc


@given(digraphs(max_n=7), st.text(max_size=8))
def test_round_trip(D, name):
    doc = io.GraphDocument.from_digraph(D, name)
    again = io.parse_document(io.serialize_document(doc))
    assert again == doc
    assert again.to_digraph() == D


def test_labels_become_ids():
    P = cons.directed_path(2)
    doc = io.GraphDocument.from_digraph(cons.cartesian(P, P))
    assert [vid for vid, _ in doc.vertices] == ["(0,0)", "(0,1)", "(1,0)",
                                                "(1,1)"]


@pytest.mark.parametrize("text,fragment", [
    ('{"vertices": [{"id": "a", "color": 1}], "arcs": [["a", "b"]]}',
     "not a declared vertex"),
    ('{"vertices": [{"id": "a", "color": 1}], "arcs": [["a", "a"]]}',
     "self-loop"),
    ('{"vertices": [{"id": "a", "color": -1}]}', "non-negative"),
    ('{"vertices": [{"id": "a", "color": 1}, {"id": "a", "color": 2}]}',
     "duplicate"),
    ('{"vertices": [{"id": "a", "color": 1}, {"id": "b", "color": 1}],'
     ' "arcs": [["a", "b"], ["a", "b"]]}', "duplicates"),
    ('[]', "object"),
])
def test_invalid_documents(text, fragment):
    with pytest.raises(DocumentError, match=fragment):
        io.parse_document(text)


def test_syntax_error_has_position():
    with pytest.raises(DocumentError) as err:
        io.parse_document('{\n  "name": "x",\n  "vertices": [,]\n}')
    assert err.value.line == 3
    assert "line 3, column" in str(err.value)


def test_bundled_figures():
    names = io.figure_names()
    for want in ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7",
                 "excrown", "fig8", "fig9", "fig8-line"):
        assert want in names
    assert io.load("fig1.json").digraph == io.load("fig1").digraph
    with pytest.raises(DocumentError):
        io.load("no-such-figure")


def test_recipe_factors(tmp_path):
    part = tmp_path / "part.json"
    part.write_text(io.serialize_document(io.GraphDocument(
        "part", (("u", 1), ("v", 2)), (("u", "v"),))))
    recipe = {
        "operation": "zykov",
        "factors": [{"generator": "cycle", "n": 2},
                    {"file": "part.json"},
                    {"figure": "fig8"}],
    }
    path = tmp_path / "z.json"
    path.write_text(json.dumps(recipe))
    loaded = io.load(str(path))
    assert loaded.digraph.n == 6
    assert loaded.recipe.operation == "zykov"


def test_recipe_colors_by_id():
    recipe = {"operation": "cartesian",
              "factors": [{"generator": "path", "n": 2},
                          {"generator": "path", "n": 2}],
              "colors": {"(0,0)": 4, "(0,1)": 3, "(1,0)": 2, "(1,1)": 1}}
    D = io.load_from_obj(recipe).digraph
    assert D.colors == (4, 3, 2, 1)


def test_crown_attachments_by_id():
    D = io.load("fig7").digraph
    assert D.has_arc(4, 2) and D.has_arc(4, 1)
    assert not D.has_arc(4, 3)


@pytest.mark.parametrize("recipe,fragment", [
    ({"operation": "tensor", "factors": [{"generator": "path", "n": 2}]},
     "unknown operation"),
    ({"operation": "cartesian", "factors": []}, "non-empty"),
    ({"operation": "cartesian", "factors": [{"generator": "blob"}]},
     "unknown generator"),
    ({"operation": "cartesian", "factors": [{"generator": "path"}]},
     "missing parameter"),
    ({"operation": "cartesian", "factors": [{"generator": "path", "n": 2}],
      "colors": [1]}, "expected 2 colors"),
    ({"operation": "in-crown", "factors": [{"generator": "path", "n": 2},
                                           {"generator": "path", "n": 2}],
      "attachments": [[["x9", [0]]]]}, "unknown vertex"),
    ({"operation": "zykov", "factors": [{"generator": "path", "n": 2}]},
     "2 digraphs"),
])
def test_invalid_recipes(recipe, fragment):
    with pytest.raises(RecipeError, match=fragment):
        io.load_from_obj(recipe)


def test_generator_parameters():
    spec = {"operation": "cartesian",
            "factors": [{"generator": "wheel", "n": 3, "spokes": "out"}]}
    D = io.load_from_obj(spec).digraph
    assert D == cons.wheel(3, "out")
    spec = {"operation": "cartesian",
            "factors": [{"generator": "bipartite", "m": 1, "n": 2,
                         "toward": "m"}]}
    assert io.load_from_obj(spec).digraph == \
        cons.oriented_complete_bipartite(1, 2, "m")


def test_from_digraph_with_duplicate_labels():
    D = ColoredDigraph([1, 1], labels=["a", "a"])
    doc = io.GraphDocument.from_digraph(D)
    assert [vid for vid, _ in doc.vertices] == ["0", "1"]
