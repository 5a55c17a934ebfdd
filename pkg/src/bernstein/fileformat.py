"""JSON interchange for algebra tables and presentations, plus the
small textual element syntax used on the command line.

All scalars travel as exact strings like "3" or "-5/2"; floats are
rejected everywhere.
"""

from __future__ import annotations

import json
import re

from .core import (AlgebraError, AlgebraTable, format_scalar, parse_scalar,
                   ZERO, ONE)
from .groebner import NcPoly, Presentation


def table_to_json(table):
    data = {"name": table.name, "basis": list(table.labels)}
    if table.has_weight:
        data["weight"] = {table.labels[i]: format_scalar(w)
                          for i, w in enumerate(table.weight) if w}
    products = []
    for (i, j), vec in table.product_items():
        products.append({
            "left": table.labels[i],
            "right": table.labels[j],
            "value": {table.labels[k]: format_scalar(c)
                      for k, c in sorted(vec.items())},
        })
    data["products"] = products
    if table.notes:
        data["notes"] = list(table.notes)
    return data


def _expect(condition, message):
    if not condition:
        raise AlgebraError(message)


def table_from_json(data):
    _expect(isinstance(data, dict), "algebra file must be a JSON object")
    basis = data.get("basis")
    _expect(isinstance(basis, list) and basis and
            all(isinstance(b, str) for b in basis),
            "field 'basis' must be a nonempty list of labels")
    known = set(basis)

    weight = None
    if "weight" in data:
        wdata = data["weight"]
        _expect(isinstance(wdata, dict), "field 'weight' must be an object")
        weight = {}
        for label, value in wdata.items():
            _expect(label in known, f"weight uses unknown label {label!r}")
            weight[label] = parse_scalar(value)

    entries = data.get("products", [])
    _expect(isinstance(entries, list), "field 'products' must be a list")
    seen = set()
    products = {}
    for pos, entry in enumerate(entries):
        _expect(isinstance(entry, dict) and
                {"left", "right", "value"} <= set(entry),
                f"product entry {pos} needs left, right and value")
        left, right = entry["left"], entry["right"]
        _expect(left in known and right in known,
                f"product entry {pos} uses an unknown label")
        pair = (left, right) if left <= right else (right, left)
        _expect(pair not in seen,
                f"duplicate product entry for pair ({left}, {right})")
        seen.add(pair)
        value = entry["value"]
        _expect(isinstance(value, dict),
                f"product entry {pos} value must be an object")
        vec = {}
        for label, coeff in value.items():
            _expect(label in known,
                    f"product entry {pos} targets unknown label {label!r}")
            vec[label] = parse_scalar(coeff)
        products[(left, right)] = vec

    notes = data.get("notes", [])
    _expect(isinstance(notes, list) and
            all(isinstance(x, str) for x in notes),
            "field 'notes' must be a list of strings")
    return AlgebraTable.build(basis, products, weight=weight,
                              name=str(data.get("name", "")),
                              notes=notes)


def save_algebra(table, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table_to_json(table), fh, indent=2, sort_keys=False)
        fh.write("\n")


def load_algebra(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"{path}: not valid JSON ({exc})")
    return table_from_json(data)


def element_to_json(element):
    table = element.algebra
    return {table.labels[i]: format_scalar(c)
            for i, c in enumerate(element.coords) if c}


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?"
    r"(?P<label>[A-Za-z_][A-Za-z0-9_]*)\s*")


def parse_element_spec(table, text):
    """Parse "e + 2u1 - 1/2 v1" style element expressions.

    Each term is an optional rational coefficient followed by a basis
    label; repeated labels accumulate.
    """
    if not isinstance(text, str) or not text.strip():
        raise AlgebraError("empty element expression")
    coords = [ZERO] * table.dim
    pos = 0
    first = True
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match:
            raise AlgebraError(
                f"cannot parse element expression near {text[pos:pos + 12]!r}")
        sign, coeff, label = match.group("sign", "coeff", "label")
        if not first and sign is None:
            raise AlgebraError(
                f"expected + or - before {label!r} in element expression")
        value = parse_scalar(coeff.replace(" ", "")) if coeff else ONE
        if sign == "-":
            value = -value
        coords[table.index(label)] += value
        pos = match.end()
        first = False
    return table.element(coords)


def presentation_to_json(presentation):
    relations = []
    for rel in presentation.relations:
        terms = []
        for word in sorted(rel.terms, key=lambda w: (len(w), w)):
            terms.append({
                "word": [presentation.generators[g] for g in word],
                "coeff": format_scalar(rel.terms[word]),
            })
        relations.append(terms)
    return {"generators": list(presentation.generators),
            "relations": relations}


def presentation_from_json(data):
    _expect(isinstance(data, dict), "presentation file must be a JSON object")
    gens = data.get("generators")
    _expect(isinstance(gens, list) and gens and
            all(isinstance(g, str) for g in gens),
            "field 'generators' must be a nonempty list of names")
    index = {g: i for i, g in enumerate(gens)}
    _expect(len(index) == len(gens), "generator names must be distinct")
    rels_data = data.get("relations")
    _expect(isinstance(rels_data, list) and rels_data,
            "field 'relations' must be a nonempty list")
    relations = []
    for pos, terms in enumerate(rels_data):
        _expect(isinstance(terms, list) and terms,
                f"relation {pos} must be a nonempty list of terms")
        poly = NcPoly.zero()
        for term in terms:
            _expect(isinstance(term, dict) and "word" in term,
                    f"relation {pos} has a malformed term")
            word = term["word"]
            _expect(isinstance(word, list) and word and
                    all(w in index for w in word),
                    f"relation {pos} uses an unknown generator")
            coeff = parse_scalar(term.get("coeff", "1"))
            poly = poly + NcPoly.word([index[w] for w in word], coeff)
        _expect(bool(poly), f"relation {pos} collapses to zero")
        relations.append(poly)
    return Presentation(tuple(gens), tuple(relations))


def save_presentation(presentation, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(presentation_to_json(presentation), fh, indent=2)
        fh.write("\n")


def load_presentation(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"{path}: not valid JSON ({exc})")
    return presentation_from_json(data)
