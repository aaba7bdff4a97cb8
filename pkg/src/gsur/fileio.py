"""Structured text formats: instances, range documents, set-cover files.

Everything is JSON with sorted keys and 2-space indent, so documents are
line-oriented and byte-stable for golden diffs.  Key names are part of the
interface: instances use "dim"/"points"/"bicolorings", set-cover files use
"universe_size"/"subsets" (0-based element indices).
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .core import (
    Ball,
    BicoloringFamily,
    Box,
    CoordInterval,
    GSur,
    IndexInterval,
    PointSet,
    Range,
)
from .errors import InvalidParams
from .solver import SetCoverInstance


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidParams(f"malformed document: {e}") from e


def instance_to_text(ps: PointSet, fam: BicoloringFamily) -> str:
    return _dumps(
        {
            "dim": ps.dim,
            "points": [list(p) for p in ps.points],
            "bicolorings": [b.colors for b in fam],
        }
    )


def instance_from_text(text: str) -> tuple[PointSet, BicoloringFamily]:
    obj = _loads(text)
    try:
        ps = PointSet(obj["points"], dim=int(obj["dim"]))
        fam = BicoloringFamily(obj["bicolorings"])
    except (KeyError, TypeError) as e:
        raise InvalidParams(f"bad instance document: {e!r}") from e
    if fam.n != ps.n:
        raise InvalidParams(
            f"bicolorings have length {fam.n} but there are {ps.n} points"
        )
    return ps, fam


def read_instance(path: str | Path) -> tuple[PointSet, BicoloringFamily]:
    return instance_from_text(Path(path).read_text())


def write_instance(path: str | Path, ps: PointSet, fam: BicoloringFamily) -> None:
    Path(path).write_text(instance_to_text(ps, fam))


def range_to_obj(rng: Range) -> dict:
    if isinstance(rng, IndexInterval):
        return {"type": "index_interval", "lo": rng.lo, "hi": rng.hi}
    if isinstance(rng, CoordInterval):
        return {"type": "coord_interval", "lo": rng.lo, "hi": rng.hi}
    if isinstance(rng, Box):
        return {"type": "box", "lo": list(rng.lo), "hi": list(rng.hi)}
    if isinstance(rng, Ball):
        return {"type": "ball", "center": list(rng.center), "radius": rng.radius}
    raise TypeError(f"not a range: {rng!r}")


def range_from_obj(obj: dict) -> Range:
    try:
        kind = obj["type"]
        if kind == "index_interval":
            return IndexInterval(int(obj["lo"]), int(obj["hi"]))
        if kind == "coord_interval":
            return CoordInterval(float(obj["lo"]), float(obj["hi"]))
        if kind == "box":
            return Box(obj["lo"], obj["hi"])
        if kind == "ball":
            return Ball(obj["center"], float(obj["radius"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidParams(f"bad range object {obj!r}: {e!r}") from e
    raise InvalidParams(f"unknown range type {kind!r}")


def gsur_document_text(gsur: GSur, **meta) -> str:
    """Range-system document: ranges (typed), size, certificate, plus any
    metadata keys the caller adds (method, verified, optimal, ...)."""
    obj = {
        "ranges": [range_to_obj(r) for r in gsur.ranges],
        "size": gsur.size,
        "certificate": [[b, r] for b, r in sorted(gsur.certificate.items())],
    }
    obj.update(meta)
    return _dumps(obj)


def gsur_from_text(text: str) -> tuple[GSur, dict]:
    """Parse a range-system document; returns the GSur and the full object.

    The certificate key is optional (an empty one is substituted) so that
    hand-written range lists can still be verified.
    """
    obj = _loads(text)
    try:
        ranges = [range_from_obj(o) for o in obj["ranges"]]
        cert = {int(b): int(r) for b, r in obj.get("certificate", [])}
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidParams(f"bad range-system document: {e!r}") from e
    return GSur(ranges, cert), obj


def read_gsur(path: str | Path) -> tuple[GSur, dict]:
    return gsur_from_text(Path(path).read_text())


def set_cover_to_text(sc: SetCoverInstance) -> str:
    return _dumps(
        {
            "universe_size": sc.universe_size,
            "subsets": [sorted(s) for s in sc.subsets],
        }
    )


def set_cover_from_text(text: str) -> SetCoverInstance:
    obj = _loads(text)
    try:
        return SetCoverInstance(int(obj["universe_size"]), obj["subsets"])
    except (KeyError, TypeError) as e:
        raise InvalidParams(f"bad set-cover document: {e!r}") from e


def read_set_cover(path: str | Path) -> SetCoverInstance:
    return set_cover_from_text(Path(path).read_text())


def candidates_to_text(ranges: Sequence[Range]) -> str:
    return _dumps({"candidates": [range_to_obj(r) for r in ranges]})


def candidates_from_text(text: str) -> list[Range]:
    obj = _loads(text)
    try:
        return [range_from_obj(o) for o in obj["candidates"]]
    except (KeyError, TypeError) as e:
        raise InvalidParams(f"bad candidates document: {e!r}") from e


def read_candidates(path: str | Path) -> list[Range]:
    return candidates_from_text(Path(path).read_text())
