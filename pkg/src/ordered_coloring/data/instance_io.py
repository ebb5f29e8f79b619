"""Reading and writing instances, colorings and decode maps."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from ordered_coloring.core.instance import Coloring, Instance, make_instance
from ordered_coloring.errors import FormatError, GraphError
from ordered_coloring.gadgets.jj1 import LAYOUT_FORMAT, Jj1Layout
from ordered_coloring.gadgets.nae import DECODE_FORMAT, NaeDecodeMap

LOG = logging.getLogger(__name__)

INSTANCE_FORMAT = "olc-instance-v1"


def instance_to_dict(inst: Instance) -> dict:
    """Instance document with the format id first."""
    doc = {"format": INSTANCE_FORMAT}
    doc.update(inst.to_dict())
    if inst.k is not None:
        doc["k"] = inst.k
    return doc


def instance_from_dict(data: Mapping[str, Any]) -> Instance:
    """Parse an instance document; a missing format id is accepted."""
    fmt = data.get("format", INSTANCE_FORMAT)
    if fmt != INSTANCE_FORMAT:
        raise FormatError(f"expected format {INSTANCE_FORMAT!r}, got {fmt!r}")
    try:
        n = int(data["n"])
        edges = [(int(e[0]), int(e[1])) for e in data.get("edges", [])]
        lists = [[int(c) for c in lst] for lst in data["lists"]]
        k = data.get("k")
        return make_instance(n, edges, lists, None if k is None else int(k))
    except GraphError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise FormatError(f"malformed instance document: {exc!r}") from None


def coloring_from_dict(data: Mapping[str, Any]) -> Optional[Coloring]:
    """Parse a coloring document; None for an unsat document."""
    status = data.get("status")
    if status == "unsat":
        return None
    if status != "sat" or "colors" not in data:
        raise FormatError("coloring document needs status 'sat' with colors, or status 'unsat'")
    try:
        return Coloring(tuple(int(c) for c in data["colors"]))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed colors: {exc}") from None


def decode_map_from_dict(data: Mapping[str, Any]) -> Union[Jj1Layout, NaeDecodeMap]:
    """Jj1 layout or NAE decode map, chosen by the format id."""
    fmt = data.get("format")
    if fmt == LAYOUT_FORMAT:
        return Jj1Layout.from_dict(data)
    if fmt == DECODE_FORMAT:
        return NaeDecodeMap.from_dict(data)
    raise FormatError(f"unknown decode map format {fmt!r}")


def read_json(path: str) -> Any:
    """Load one JSON document."""
    try:
        with Path(path).open(encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def write_json(path: str, doc: Any) -> None:
    """Write one JSON document."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    LOG.debug("wrote %s", target)


def load_instance(path: str) -> Instance:
    """Read an instance file."""
    return instance_from_dict(read_json(path))


def save_instance(inst: Instance, path: str) -> None:
    """Write an instance file."""
    write_json(path, instance_to_dict(inst))


def load_coloring(path: str) -> Optional[Coloring]:
    """Read a coloring file."""
    return coloring_from_dict(read_json(path))
