"""JSON graph documents, recipe files and the bundled figure instances.

A graph document looks like::

    {
      "name": "fig1",
      "vertices": [
        {"id": "x0", "color": 0},
        ...
      ],
      "arcs": [
        ["x1", "x0"],
        ...
      ]
    }

A recipe has an ``"operation"`` key instead (see :func:`parse_recipe`).
Anything that loads a graph accepts either form; recipes are built on load.
"""

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import constructors as cons
from .digraph import ColoredDigraph
from .errors import DocumentError, GraphError, RecipeError

DATA_PACKAGE = "upkernel.data"


@dataclass(frozen=True)
class GraphDocument:
    name: str
    vertices: tuple  # ((id, color), ...)
    arcs: tuple      # ((tail id, head id), ...)

    def to_digraph(self):
        index = {vid: i for i, (vid, _) in enumerate(self.vertices)}
        arcs = [(index[t], index[h]) for t, h in self.arcs]
        return ColoredDigraph([c for _, c in self.vertices], arcs,
                              [vid for vid, _ in self.vertices])

    @classmethod
    def from_digraph(cls, D, name=""):
        ids = [D.label(v) for v in D.vertices]
        if len(set(ids)) != len(ids):
            ids = [str(v) for v in D.vertices]
        return cls(name,
                   tuple((ids[v], D.color(v)) for v in D.vertices),
                   tuple((ids[u], ids[v]) for u, v in D.sorted_arcs()))


# -- parsing -----------------------------------------------------------------------

def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None


def _require(cond, message):
    if not cond:
        raise DocumentError(message)


def document_from_obj(obj):
    _require(isinstance(obj, dict), "top level must be an object")
    name = obj.get("name", "")
    _require(isinstance(name, str), "name must be a string")
    verts = obj.get("vertices")
    _require(isinstance(verts, list), "vertices must be a list")
    seen = set()
    vertices = []
    for i, entry in enumerate(verts):
        where = f"vertices[{i}]"
        _require(isinstance(entry, dict), f"{where} must be an object")
        vid, color = entry.get("id"), entry.get("color")
        _require(isinstance(vid, str) and vid, f"{where}.id must be a "
                 "non-empty string")
        _require(vid not in seen, f"{where}.id {vid!r} is a duplicate")
        _require(isinstance(color, int) and not isinstance(color, bool)
                 and color >= 0,
                 f"{where}.color must be a non-negative integer")
        seen.add(vid)
        vertices.append((vid, color))
    raw_arcs = obj.get("arcs", [])
    _require(isinstance(raw_arcs, list), "arcs must be a list")
    arcs, arc_seen = [], set()
    for i, entry in enumerate(raw_arcs):
        where = f"arcs[{i}]"
        _require(isinstance(entry, list) and len(entry) == 2,
                 f"{where} must be a [tail, head] pair")
        t, h = entry
        _require(t in seen, f"{where} tail {t!r} is not a declared vertex")
        _require(h in seen, f"{where} head {h!r} is not a declared vertex")
        _require(t != h, f"{where} is a self-loop at {t!r}")
        _require((t, h) not in arc_seen, f"{where} duplicates ({t}, {h})")
        arc_seen.add((t, h))
        arcs.append((t, h))
    return GraphDocument(name, tuple(vertices), tuple(arcs))


def parse_document(text):
    return document_from_obj(_loads(text))


def serialize_document(doc):
    lines = ["{", f'  "name": {json.dumps(doc.name)},', '  "vertices": [']
    for i, (vid, color) in enumerate(doc.vertices):
        comma = "," if i + 1 < len(doc.vertices) else ""
        lines.append(
            f'    {{"id": {json.dumps(vid)}, "color": {color}}}{comma}')
    lines.append("  ],")
    lines.append('  "arcs": [')
    for i, (t, h) in enumerate(doc.arcs):
        comma = "," if i + 1 < len(doc.arcs) else ""
        lines.append(f"    [{json.dumps(t)}, {json.dumps(h)}]{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- figures -----------------------------------------------------------------------

def figure_names():
    files = resources.files(DATA_PACKAGE).iterdir()
    return sorted(f.name[:-5] for f in files if f.name.endswith(".json"))


def _figure_text(name):
    ref = resources.files(DATA_PACKAGE) / f"{name}.json"
    if not ref.is_file():
        raise DocumentError(f"no bundled figure named {name!r}")
    return ref.read_text(encoding="utf-8")


def _resolve(source, base_dir=None):
    """Return ``(text, directory)`` for a path or bundled figure name."""
    path = Path(source)
    if base_dir is not None and not path.is_absolute():
        candidate = Path(base_dir) / path
        if candidate.exists():
            path = candidate
    if path.exists():
        return path.read_text(encoding="utf-8"), path.parent
    name = path.name[:-5] if path.name.endswith(".json") else path.name
    if str(path.parent) in ("", ".") and name in figure_names():
        return _figure_text(name), None
    raise DocumentError(f"no such file or bundled figure: {source}")


def load_obj(source, base_dir=None):
    text, directory = _resolve(source, base_dir)
    return _loads(text), directory


@dataclass(frozen=True)
class Loaded:
    """A loaded input: the digraph plus, for recipes, the recipe itself."""
    digraph: ColoredDigraph
    name: str
    recipe: object = None


def load(source, base_dir=None):
    obj, directory = load_obj(source, base_dir)
    return load_from_obj(obj, directory)


def load_from_obj(obj, directory=None):
    if isinstance(obj, dict) and "operation" in obj:
        recipe = parse_recipe(obj, directory)
        try:
            D = recipe.build()
        except GraphError as exc:
            raise RecipeError(str(exc)) from None
        return Loaded(D, recipe.name, recipe)
    doc = document_from_obj(obj)
    return Loaded(doc.to_digraph(), doc.name)


def load_digraph(source):
    return load(source).digraph


# -- recipes ----------------------------------------------------------------------

GENERATORS = {
    "path": lambda s: cons.directed_path(s["n"]),
    "cycle": lambda s: cons.directed_cycle(s["n"]),
    "in-star": lambda s: cons.in_star(s["k"]),
    "out-star": lambda s: cons.out_star(s["k"]),
    "bipartite": lambda s: cons.oriented_complete_bipartite(
        s["m"], s["n"], s.get("toward", "n")),
    "wheel": lambda s: cons.wheel(s["n"], s.get("spokes", cons.SPOKE_IN)),
}


def _apply_colors(D, colors, where):
    if colors is None:
        return D
    if isinstance(colors, dict):
        missing = [D.label(v) for v in D.vertices
                   if D.label(v) not in colors]
        if missing:
            raise RecipeError(f"{where}: no color for {missing[0]}")
        colors = [colors[D.label(v)] for v in D.vertices]
    if not isinstance(colors, list) or len(colors) != D.n:
        raise RecipeError(f"{where}: expected {D.n} colors")
    for c in colors:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise RecipeError(f"{where}: colors must be non-negative "
                              "integers")
    return D.with_colors(colors)


def _factor(spec, directory, where):
    if not isinstance(spec, dict):
        raise RecipeError(f"{where} must be an object")
    try:
        if "generator" in spec:
            kind = spec["generator"]
            if kind not in GENERATORS:
                raise RecipeError(f"{where}: unknown generator {kind!r}")
            D = GENERATORS[kind](spec)
        elif "figure" in spec:
            D = load(spec["figure"]).digraph
        elif "file" in spec:
            D = load(spec["file"], directory).digraph
        elif "vertices" in spec:
            D = document_from_obj(spec).to_digraph()
        elif "operation" in spec:
            D = parse_recipe(spec, directory).build()
        else:
            raise RecipeError(f"{where}: need generator, figure, file, "
                              "operation or an inline document")
    except KeyError as exc:
        raise RecipeError(f"{where}: missing parameter {exc}") from None
    except GraphError as exc:
        raise RecipeError(f"{where}: {exc}") from None
    except DocumentError as exc:
        raise RecipeError(f"{where}: {exc}") from None
    return _apply_colors(D, spec.get("colors"), where)


def _vertex_ref(D, ref, where):
    if isinstance(ref, int) and not isinstance(ref, bool):
        if 0 <= ref < D.n:
            return ref
    elif isinstance(ref, str):
        for v in D.vertices:
            if D.label(v) == ref:
                return v
    raise RecipeError(f"{where}: unknown vertex {ref!r}")


def parse_recipe(obj, directory=None):
    """Build a :class:`~upkernel.constructors.ProductRecipe` from JSON.

    Keys: ``operation``, ``factors`` (generator specs, figure names, file
    references or inline documents), optional ``attachments`` for crowns
    (per satellite, a list of ``[x, [y, ...]]`` with vertex ids or
    indices), optional ``colors`` for the result (list in vertex order or
    an object keyed by vertex id) and ``name``.
    """
    if not isinstance(obj, dict):
        raise RecipeError("recipe must be an object")
    op = obj.get("operation")
    if op not in cons.OPERATIONS:
        raise RecipeError(f"unknown operation {op!r}")
    specs = obj.get("factors")
    if not isinstance(specs, list) or not specs:
        raise RecipeError("factors must be a non-empty list")
    factors = [_factor(s, directory, f"factors[{i}]")
               for i, s in enumerate(specs)]
    attachments = ()
    if op in ("in-crown", "ex-crown"):
        raw = obj.get("attachments")
        family = factors[1:]
        if not isinstance(raw, list) or len(raw) != len(family):
            raise RecipeError("attachments must list one entry per "
                              "satellite")
        base = factors[0]
        attachments = []
        for i, (part, entries) in enumerate(zip(family, raw)):
            where = f"attachments[{i}]"
            if not isinstance(entries, list):
                raise RecipeError(f"{where} must be a list")
            norm = []
            for entry in entries:
                if not (isinstance(entry, list) and len(entry) == 2
                        and isinstance(entry[1], list)):
                    raise RecipeError(f"{where}: entries are [x, [y, ...]]")
                x = _vertex_ref(base, entry[0], where)
                ys = [_vertex_ref(part, y, where) for y in entry[1]]
                norm.append((x, ys))
            attachments.append(tuple(norm))
        attachments = tuple(attachments)
    elif "attachments" in obj:
        raise RecipeError(f"attachments make no sense for {op}")
    recipe = cons.ProductRecipe(op, tuple(factors), attachments, None,
                                obj.get("name", ""))
    colors = obj.get("colors")
    if colors is not None:
        try:
            D = recipe.build()
        except GraphError as exc:
            raise RecipeError(str(exc)) from None
        colored = _apply_colors(D, colors, "colors")
        recipe = cons.ProductRecipe(op, recipe.factors, attachments,
                                    list(colored.colors), recipe.name)
    return recipe
