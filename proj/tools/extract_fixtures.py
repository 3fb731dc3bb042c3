#!/usr/bin/env python3
"""Transcribe the published minimal-collection tables (markdown source) into
per-surface JSON fixtures.

Usage: extract_fixtures.py tables.md out_dir
"""
import ast
import json
import re
import sys

SURFACE_HEADINGS = [
    (r"\\mathbb\{P\}\^2\$", "P2"),
    (r"\\mathbb\{P\}\^1\\times \\mathbb\{P\}\^1", "P1xP1"),
] + [(r"X_%d\$" % n, "X%d" % n) for n in range(1, 9)]


def surface_of(heading):
    for pat, sid in SURFACE_HEADINGS:
        if re.search(pat, heading):
            return sid
    raise ValueError("unknown surface heading: " + heading)


def ints(text):
    return [int(t) for t in re.findall(r"-?\d+", text)]


def parse_label(lines, start):
    body = []
    i = start
    while i < len(lines) and not lines[i].startswith("\\subsubsection") and not lines[i].startswith("\\subsection"):
        body.append(lines[i])
        i += 1
    text = "\n".join(body)
    alphas = ints(re.search(r"alpha_\d+(?:,\\alpha_\d+)*&=([^\\]*)", text).group(1))
    ranks = ints(re.search(r"r_\d+(?:,r_\d+)*&=([^\\]*)", text).group(1))
    k = len(alphas)
    arr = re.search(r"\\begin\{array\}\{r+\}(.*?)\\end\{array\}", text, re.S).group(1)
    rows = [ints(row) for row in arr.split("\\\\") if row.strip()]
    assert len(rows) == k and all(len(r) == k for r in rows)
    q = re.search(r"\\Q(?:three|four)((?:\{-?\d+\})+)", text)
    quiver = ints(q.group(1))
    coll = re.search(r"Collection:(.*?)(?:\n\s*\n|\n\})", text + "\n\n", re.S).group(1)
    blocks = []
    for grp in re.findall(r"\\hl\{([^{}]*)\}", coll):
        objs = []
        for r, c1 in re.findall(r"\[\s*(-?\d+)\s*,\s*\(([^)]*)\)\s*\]", grp):
            objs.append({"r": int(r), "c1": ints(c1)})
        blocks.append(objs)
    assert [len(b) for b in blocks] == alphas, (alphas, [len(b) for b in blocks])
    orbit = None
    m = re.search(r"The full orbit is reachable:(.*)", text)
    if m:
        tail = m.group(1).strip()
        if "trivial" in tail:
            orbit = {"kind": "trivial_group"}
        elif "all reflections" in tail:
            orbit = {"kind": "all_reflections_equivalent"}
        else:
            cert = ast.literal_eval(tail.split("=", 1)[1].strip())
            orbit = {"kind": "certificate",
                     "pairs": [{"weyl": list(w), "mutations": list(mm)} for w, mm in cert]}
    return {
        "alphas": alphas,
        "ranks": ranks,
        "reduced_gram": rows,
        "reduced_quiver": quiver,
        "blocks": blocks,
        "orbit": orbit,
    }, i


def parse_relations(lines, start):
    rels = []
    i = start
    while i < len(lines) and "\\end{array}" not in lines[i]:
        m = re.search(r"\((\d+),\s*(\d+)\)\\rightarrow\((\d+),\s*(\*|\\ast|\d+)\)\s*&\s*\[([^\]]*)\]", lines[i])
        if m:
            tgt = m.group(4)
            rels.append({
                "source": [int(m.group(1)), int(m.group(2))],
                "target": [int(m.group(3)), None if not tgt.isdigit() else int(tgt)],
                "sequence": ints(m.group(5)),
            })
        i += 1
    if i < len(lines):
        m = re.search(r"\((\d+),\s*(\d+)\)\\rightarrow\((\d+),\s*(\*|\\ast|\d+)\)\s*&\s*\[([^\]]*)\]", lines[i])
        if m:
            tgt = m.group(4)
            rels.append({"source": [int(m.group(1)), int(m.group(2))],
                         "target": [int(m.group(3)), None if not tgt.isdigit() else int(tgt)],
                         "sequence": ints(m.group(5))})
    return rels


def main():
    src, out = sys.argv[1], sys.argv[2]
    lines = open(src, encoding="utf-8").read().split("\n")
    start = next(i for i, l in enumerate(lines) if l.startswith("\\section{Minimal block-complete"))
    end = next(i for i, l in enumerate(lines) if i > start and l.startswith("\\section{"))
    # Headings may be glued to the end of a previous array line; split them off.
    chunk = []
    for l in lines[start:end]:
        parts = re.split(r"(?=\\subsection\{Minimal collections)", l)
        chunk.extend(p for p in parts if p != "")
    surfaces = {}
    cur = None
    i = 0
    while i < len(chunk):
        l = chunk[i]
        if l.startswith("\\subsection{Minimal collections"):
            cur = surface_of(l)
            surfaces[cur] = {"surface": cur, "labels": [], "relations": []}
            i += 1
        elif l.startswith("\\subsubsection{Label") and cur:
            b, n = ints(l)
            entry, i = parse_label(chunk, i + 1)
            entry = {"label": [b, n], **entry}
            surfaces[cur]["labels"].append(entry)
        elif l.startswith("\\subsubsection{Relations}") and cur:
            surfaces[cur]["relations"] = parse_relations(chunk, i + 1)
            i += 1
        else:
            i += 1
    for sid, data in surfaces.items():
        with open("%s/%s.json" % (out, sid), "w", encoding="utf-8") as f:
            json.dump(data, f, indent=1)
            f.write("\n")
        print(sid, [tuple(e["label"]) for e in data["labels"]], len(data["relations"]), "relations")


if __name__ == "__main__":
    main()
