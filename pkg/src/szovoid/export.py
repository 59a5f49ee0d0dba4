"""Serialization of designs: JSON, incidence matrix, and block-list formats.

All three formats are byte-deterministic for a given (q, family, poly):
blocks are already in lexicographic order when they reach this module and
nothing time- or environment-dependent is written.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import designs as designs_mod
from .designs import Design, DesignParams
from .gf2m import GF2m
from .suzuki import INFINITY, Ovoid

FORMATS = ("json", "matrix", "blocks")


def _point_descriptor(pt):
    return "inf" if pt is INFINITY else [pt[0], pt[1]]


def design_payload(design: Design) -> dict:
    p = design.params
    return {
        "q": design.q,
        "family": design.family,
        "poly": f"0x{design.poly:X}",
        "v": p.v,
        "k": p.k,
        "lambda": p.lambda_,
        "b": p.b,
        "r": p.r,
        "points": [_point_descriptor(pt) for pt in design.ovoid.points],
        "blocks": design.blocks.astype(int).tolist(),
    }


def write_json(design: Design, path) -> None:
    payload = design_payload(design)
    Path(path).write_text(json.dumps(payload, separators=(",", ":")) + "\n")


def write_matrix(design: Design, path) -> None:
    p = design.params
    inc = designs_mod.incidence_matrix(design, dtype=np.uint8)
    digits = inc + ord("0")
    lines = [f"{p.v} {p.b} {p.k} {p.lambda_} {p.r}"]
    lines.extend(row.tobytes().decode("ascii") for row in digits)
    Path(path).write_text("\n".join(lines) + "\n")


def write_blocks(design: Design, path) -> None:
    p = design.params
    header = (f"# q={design.q} family={design.family} poly=0x{design.poly:X} "
              f"v={p.v} k={p.k} lambda={p.lambda_} b={p.b} r={p.r}")
    lines = [header]
    lines.extend(" ".join(str(int(x)) for x in row) for row in design.blocks)
    Path(path).write_text("\n".join(lines) + "\n")


_WRITERS = {"json": write_json, "matrix": write_matrix, "blocks": write_blocks}


def write_design(design: Design, path, fmt: str) -> None:
    try:
        writer = _WRITERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    writer(design, path)


def load_json(path) -> Design:
    """Rebuild a Design from a JSON export, for round-trip verification.

    The ovoid is reconstructed from (q, poly) and checked against the stored
    point descriptors.
    """
    payload = json.loads(Path(path).read_text())
    field = GF2m(q=payload["q"], poly=int(payload["poly"], 16))
    ovoid = Ovoid(field)
    stored = [INFINITY if d == "inf" else (d[0], d[1]) for d in payload["points"]]
    if stored != ovoid.points:
        raise ValueError("stored point list does not match the ovoid")
    blocks = np.array(payload["blocks"],
                      dtype=np.uint16 if payload["v"] <= 0xFFFF else np.int32)
    params = DesignParams(v=payload["v"], k=payload["k"],
                          lambda_=payload["lambda"], b=payload["b"],
                          r=payload["r"])
    return Design(q=payload["q"], family=payload["family"],
                  poly=int(payload["poly"], 16), params=params,
                  blocks=blocks, ovoid=ovoid)
