"""Instance document serialization: canonical JSON, lossless round-trips.

Documents carry `format_version` "1" and a `kind` of "segment" or "generic".
Integers survive arbitrary precision: values beyond ±2^53 are serialized as
strings and accepted back in either form.
"""

from __future__ import annotations

import json
import warnings

from .geometry import GeometryError, LatticePoint, primitive, segment
from .hypergraph import GenericHypergraph, Hypergraph, SegmentHypergraph, ValidationError, build

FORMAT_VERSION = "1"
_SAFE = 2**53


class NonPrimitiveDirectionWarning(UserWarning):
    """A document edge direction had a common factor and was normalized."""


class DocumentError(ValidationError):
    """Malformed instance document."""


def _enc_int(n: int):
    return n if -_SAFE <= n <= _SAFE else str(n)


def _dec_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise DocumentError(f"expected integer, got {v!r}")
    try:
        return int(v)
    except ValueError as e:
        raise DocumentError(f"expected integer, got {v!r}") from e


def _dec_vertex(v):
    if isinstance(v, list):
        return tuple(_dec_vertex(x) for x in v)
    if isinstance(v, (int, str)):
        return v
    raise DocumentError(f"unsupported vertex id {v!r}")


def to_document(H: Hypergraph, metadata: dict | None = None) -> dict:
    """Canonical document for an instance (edges already canonical and sorted)."""
    doc: dict = {"format_version": FORMAT_VERSION}
    if isinstance(H, SegmentHypergraph):
        doc["kind"] = "segment"
        doc["r"] = H.r
        doc["edges"] = [
            {
                "base": [_enc_int(s.base.x), _enc_int(s.base.y)],
                "dir": [_enc_int(s.dir.dx), _enc_int(s.dir.dy)],
                "count": s.count,
            }
            for s in H.edges
        ]
    else:
        doc["kind"] = "generic"
        doc["vertices"] = [list(v) if isinstance(v, tuple) else v for v in H.vertices]
        doc["edges"] = [
            sorted(list(v) if isinstance(v, tuple) else v for v in e) for e in H.edges
        ]
    if metadata:
        doc["metadata"] = metadata
    return doc


def from_document(doc: dict) -> Hypergraph:
    """Validate a document dict into an instance; non-primitive dirs are normalized."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc.get('format_version')!r}")
    kind = doc.get("kind")
    if kind == "segment":
        r = _dec_int(doc.get("r"))
        segs = []
        for i, e in enumerate(doc.get("edges", [])):
            try:
                bx, by = (_dec_int(v) for v in e["base"])
                dx, dy = (_dec_int(v) for v in e["dir"])
                count = _dec_int(e["count"])
            except (KeyError, TypeError, ValueError) as exc:
                raise DocumentError(f"edge {i}: malformed entry {e!r}") from exc
            try:
                d = primitive((dx, dy))
            except GeometryError as exc:
                raise DocumentError(f"edge {i}: bad direction {(dx, dy)}") from exc
            if (abs(dx), abs(dy)) != (abs(d.dx), abs(d.dy)):
                warnings.warn(
                    f"edge {i}: direction ({dx},{dy}) is not primitive; normalized to "
                    f"({d.dx},{d.dy})",
                    NonPrimitiveDirectionWarning,
                    stacklevel=2,
                )
                dx, dy = d.dx, d.dy
            segs.append(segment((bx, by), (dx, dy), count))
        return build(r, segs)
    if kind == "generic":
        verts = [_dec_vertex(v) for v in doc.get("vertices", [])]
        edges = [[_dec_vertex(v) for v in e] for e in doc.get("edges", [])]
        return GenericHypergraph.make(verts, edges)
    raise DocumentError(f"unknown kind {kind!r}")


def serialize(H: Hypergraph, metadata: dict | None = None) -> str:
    """Byte-stable canonical JSON text for an instance."""
    return json.dumps(to_document(H, metadata), sort_keys=True, separators=(",", ":")) + "\n"


def parse(text: str) -> Hypergraph:
    """Parse document text; syntax errors report position, semantic errors the edge."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"syntax error at line {e.lineno} column {e.colno}: {e.msg}") from e
    return from_document(doc)
