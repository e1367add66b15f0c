"""JSON container for maps, words, presentations, certificates and bundles.

Every file is {"format_version": 1, "kind": ..., "payload": ...}. Rationals
are written as "p/q" strings (infinite ends as "inf"/"-inf") and keys are
sorted, so the same value always produces the same bytes.
"""
from __future__ import annotations

import json
from pathlib import Path

from .constructions.square_root import Row
from .plcore import (ETPL, CompactifiedMap, IntervalQ, PeriodicPL, PiecewiseHomeo, PiecewiseMobius,
                     RootPL, RootProduct, fmt)
from .plcore.intervals import Q, Qx
from .words import Presentation, Word

FORMAT_VERSION = 1
KINDS = ("map", "word", "presentation", "certificate", "bundle")


class ArtifactError(ValueError):
    pass


def _pairs(pts):
    return [[fmt(x), fmt(y)] for x, y in pts]


def _unpairs(raw):
    return tuple((Q(x), Q(y)) for x, y in raw)


def encode_interval(J: IntervalQ) -> dict:
    return {"lo": fmt(J.lo), "hi": fmt(J.hi), "lo_closed": J.lo_closed, "hi_closed": J.hi_closed}


def decode_interval(d: dict) -> IntervalQ:
    return IntervalQ(Qx(d["lo"]), Qx(d["hi"]), bool(d["lo_closed"]), bool(d["hi_closed"]))


def encode_map(f) -> dict:
    if isinstance(f, ETPL):
        return {"class": "etpl", "breakpoints": _pairs(f.breakpoints),
                "left_offset": fmt(f.left_offset), "right_offset": fmt(f.right_offset)}
    if isinstance(f, PeriodicPL):
        return {"class": "periodic", "period": fmt(f.period), "breakpoints": _pairs(f.breakpoints),
                "offset": fmt(f.offset)}
    if isinstance(f, CompactifiedMap):
        return {"class": "compactified", "target": encode_interval(f.target), "inner": encode_map(f.inner)}
    if isinstance(f, PiecewiseHomeo):
        return {"class": "piecewise",
                "parts": [[encode_interval(J), None if rep is None else encode_map(rep)] for J, rep in f.parts]}
    if isinstance(f, PiecewiseMobius):
        return {"class": "mobius", "kinks": [fmt(k) for k in f.kinks],
                "maps": [[fmt(c) for c in m] for m in f.maps]}
    if isinstance(f, RootPL):
        return {"class": "root", "base": encode_map(f.base), "degree": f.degree, "anchor": fmt(f.anchor),
                "divisions": [fmt(s) for s in f.divisions], "pieces": [_pairs(p) for p in f.pieces],
                "inverted": f.inverted, "max_steps": f.max_steps}
    if isinstance(f, RootProduct):
        return {"class": "root_product", "roots": [encode_map(r) for r in f.roots]}
    raise ArtifactError(f"cannot serialize {type(f).__name__}")


def decode_map(d: dict):
    try:
        cls = d["class"]
        if cls == "etpl":
            return ETPL(_unpairs(d["breakpoints"]), Q(d["left_offset"]), Q(d["right_offset"]))
        if cls == "periodic":
            return PeriodicPL(Q(d["period"]), _unpairs(d["breakpoints"]), Q(d["offset"]))
        if cls == "compactified":
            return CompactifiedMap(decode_interval(d["target"]), decode_map(d["inner"]))
        if cls == "piecewise":
            return PiecewiseHomeo(tuple((decode_interval(J), None if rep is None else decode_map(rep))
                                        for J, rep in d["parts"]))
        if cls == "mobius":
            return PiecewiseMobius(tuple(Q(k) for k in d["kinks"]),
                                   tuple(tuple(int(Q(c)) for c in m) for m in d["maps"]))
        if cls == "root":
            return RootPL(decode_map(d["base"]), int(d["degree"]), Q(d["anchor"]),
                          tuple(Q(s) for s in d["divisions"]), tuple(_unpairs(p) for p in d["pieces"]),
                          bool(d["inverted"]), int(d["max_steps"]))
        if cls == "root_product":
            return RootProduct(tuple(decode_map(r) for r in d["roots"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ArtifactError(f"malformed {d.get('class', '?')} map: {e}") from e
    raise ArtifactError(f"unknown map class {cls!r}")


def encode_word(w: Word) -> dict:
    return {"text": str(w), "letters": [[g, e] for g, e in w.letters]}


def decode_word(d: dict) -> Word:
    return Word(tuple((str(g), int(e)) for g, e in d["letters"]))


def encode_presentation(P: Presentation) -> dict:
    return {"name": P.name, "generators": list(P.generators), "relators": [encode_word(r) for r in P.relators]}


def decode_presentation(d: dict) -> Presentation:
    return Presentation(tuple(d["generators"]), tuple(decode_word(r) for r in d["relators"]), d.get("name", ""))


def encode_rows(rows) -> list:
    return [{"name": r.name, "ok": bool(r.ok), "detail": r.detail} for r in rows]


def decode_rows(raw) -> tuple:
    return tuple(Row(r["name"], bool(r["ok"]), r.get("detail", "")) for r in raw)


def make_bundle(name: str, maps: dict, certificates: dict, params: dict | None = None) -> dict:
    """Bundle payload: named maps plus certificate tables keyed by suite."""
    return {"name": name, "maps": {k: encode_map(v) for k, v in maps.items()},
            "certificates": {k: encode_rows(v) for k, v in certificates.items()},
            "params": dict(params or {})}


def bundle_maps(payload: dict) -> dict:
    return {k: decode_map(v) for k, v in payload["maps"].items()}


def bundle_certificates(payload: dict) -> dict:
    return {k: decode_rows(v) for k, v in payload["certificates"].items()}


def _encode_payload(kind, value):
    if kind == "map":
        return encode_map(value)
    if kind == "word":
        return encode_word(value)
    if kind == "presentation":
        return encode_presentation(value)
    if kind == "certificate":
        return encode_rows(value)
    return value  # bundle payloads are already plain data


def _decode_payload(kind, payload):
    if kind == "map":
        return decode_map(payload)
    if kind == "word":
        return decode_word(payload)
    if kind == "presentation":
        return decode_presentation(payload)
    if kind == "certificate":
        return decode_rows(payload)
    return payload


def dumps(kind: str, value) -> str:
    if kind not in KINDS:
        raise ArtifactError(f"unknown payload kind {kind!r}")
    doc = {"format_version": FORMAT_VERSION, "kind": kind, "payload": _encode_payload(kind, value)}
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def loads(text: str) -> tuple:
    """Return (kind, value)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ArtifactError(f"not a JSON artifact: {e}") from e
    if not isinstance(doc, dict) or doc.get("format_version") != FORMAT_VERSION:
        raise ArtifactError("missing or unsupported format_version")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ArtifactError(f"unknown payload kind {kind!r}")
    try:
        return kind, _decode_payload(kind, doc["payload"])
    except (KeyError, TypeError) as e:
        raise ArtifactError(f"malformed {kind} payload: {e}") from e


def save(path, kind: str, value) -> None:
    Path(path).write_text(dumps(kind, value), encoding="utf-8")


def load(path) -> tuple:
    return loads(Path(path).read_text(encoding="utf-8"))
