"""Edge-list text formats.

Plain format (0-indexed)::

    # label 0 a_0          <- optional label block
    p 20 30                <- optional header
    0 5
    ...

DIMACS-like format (1-indexed)::

    c comment
    p edge 20 30
    e 1 6
"""

from __future__ import annotations

import os
import re
from typing import TextIO

from metdim.errors import GraphError, MalformedGraphFile
from metdim.graph import Graph, build_graph

_LABEL = re.compile(r"^#\s*label\s+(\d+)\s+(\S+)\s*$")


def parse_edge_list(text: str, dimacs: bool = False, name: str = "") -> Graph:
    labels: dict[int, str] = {}
    pairs: list[tuple[int, int]] = []
    n: int | None = None
    m: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        match = _LABEL.match(line)
        if match:
            labels[int(match.group(1))] = match.group(2)
            continue
        if line.startswith("#") or (dimacs and line.startswith("c")):
            continue
        line = line.split("#", 1)[0]
        tok = line.split()
        try:
            if tok[0] == "p":
                if n is not None:
                    raise MalformedGraphFile(f"line {lineno}: second header")
                nums = tok[2:] if dimacs else tok[1:]
                if dimacs and (len(tok) != 4 or tok[1] != "edge"):
                    raise MalformedGraphFile(f"line {lineno}: expected 'p edge <n> <m>'")
                n, m = int(nums[0]), int(nums[1])
                continue
            if dimacs:
                if tok[0] != "e" or len(tok) != 3:
                    raise MalformedGraphFile(f"line {lineno}: expected 'e <u> <v>'")
                pairs.append((int(tok[1]) - 1, int(tok[2]) - 1))
            else:
                if len(tok) != 2:
                    raise MalformedGraphFile(f"line {lineno}: expected '<u> <v>'")
                pairs.append((int(tok[0]), int(tok[1])))
        except (ValueError, IndexError) as exc:
            if isinstance(exc, MalformedGraphFile):
                raise
            raise MalformedGraphFile(f"line {lineno}: cannot parse {raw!r}") from None

    if dimacs and n is None:
        raise MalformedGraphFile("DIMACS input lacks a 'p edge' header")
    if n is None:
        used = [x for p in pairs for x in p] + list(labels)
        if not used:
            raise MalformedGraphFile("no edges")
        n = max(used) + 1
    if m is not None and m != len(pairs):
        raise MalformedGraphFile(f"header declares {m} edges, found {len(pairs)}")
    try:
        return build_graph(n, pairs, labels=labels, name=name)
    except GraphError as exc:
        raise MalformedGraphFile(str(exc)) from exc


def read_edge_list(path: str | os.PathLike, dimacs: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_edge_list(text, dimacs=dimacs, name=os.path.basename(str(path)))


def format_edge_list(g: Graph, with_labels: bool = True) -> str:
    lines = []
    if with_labels and g.labels:
        lines.extend(f"# label {v} {g.labels[v]}" for v in sorted(g.labels))
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, out: TextIO) -> None:
    out.write(format_edge_list(g))
