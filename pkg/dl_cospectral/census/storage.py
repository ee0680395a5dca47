"""JSONL persistence of cospectral classes, one class per line."""

import json
import logging
import sys
from pathlib import Path
from typing import IO, Iterable, List, Union

import jsonschema

from dl_cospectral.census.reducer import CospectralClass
from dl_cospectral.core.exceptions import SchemaError
from dl_cospectral.spectra.charpoly import CharPoly

logger = logging.getLogger(__name__)

CLASS_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "CospectralClass",
    "description": "Coefficients are decimal strings, constant term first.",
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "poly": {
            "type": "array",
            "items": {"type": "string", "pattern": r"^-?\d+$"},
            "minItems": 2,
        },
        "members": {
            "type": "array",
            "items": {"type": "string", "pattern": r"^[?-~]+$"},
            "minItems": 2,
            "uniqueItems": True,
        },
    },
    "required": ["order", "poly", "members"],
    "additionalProperties": False,
}


def class_to_record(c: CospectralClass) -> dict:
    return {
        "order": c.order,
        "poly": [str(coefficient) for coefficient in c.poly.coefficients],
        "members": list(c.members),
    }


def record_to_class(record: dict, line: int = None) -> CospectralClass:
    """
    Raises:
        SchemaError: If the record violates ``CLASS_SCHEMA`` or its
            polynomial is not monic of degree ``order``
    """
    try:
        jsonschema.validate(record, CLASS_SCHEMA)
    except jsonschema.ValidationError as e:
        raise SchemaError(e.message, line) from e
    if len(record["poly"]) != record["order"] + 1:
        raise SchemaError(f"poly has {len(record['poly'])} coefficients for order {record['order']}", line)
    try:
        poly = CharPoly(tuple(int(value) for value in record["poly"]))
    except ValueError as e:
        raise SchemaError(str(e), line) from e
    return CospectralClass(poly, tuple(record["members"]))


def dump_classes(classes: Iterable[CospectralClass], stream: IO[str]) -> int:
    count = 0
    for c in classes:
        stream.write(json.dumps(class_to_record(c), separators=(",", ":")) + "\n")
        count += 1
    return count


def save_classes(classes: Iterable[CospectralClass], path: Union[str, Path]) -> None:
    """Write classes as JSONL to ``path``, or to stdout when ``path`` is ``"-"``."""
    if str(path) == "-":
        count = dump_classes(classes, sys.stdout)
    else:
        with open(path, "w", encoding="ascii") as stream:
            count = dump_classes(classes, stream)
    logger.info(f"Saved {count} cospectral classes to {path}")


def load_classes(path: Union[str, Path]) -> List[CospectralClass]:
    """
    Read a JSONL class file.

    Raises:
        SchemaError: On invalid JSON or a record violating the schema; the
            error carries the line number
    """
    classes = []
    with open(path, encoding="utf-8") as stream:
        for line_number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise SchemaError(f"invalid JSON: {e.msg}", line_number) from e
            classes.append(record_to_class(record, line_number))
    return classes
