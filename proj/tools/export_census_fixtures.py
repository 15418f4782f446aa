#!/usr/bin/env python3
"""Export small closed orientable census triangulations as TRI-v1 fixtures.

Development tool only; needs the `regina` Python module. The exported files
are committed under tests/fixtures/census/ so the build does not depend on it.

Selection: every census entry with at most --max-rank2-tets tetrahedra whose
H^1(M; Z/2) has rank >= 2, plus every entry with at most --max-small-tets
tetrahedra (for flip and isomorphism tests).
"""

import argparse
import bz2
import pathlib
import re

import regina

CENSUS = pathlib.Path(regina.__file__).parent / "pyCensus" / "closed-or-census-11.tdb"


def census_records(path):
    """(isosig, name) pairs from the census database's compressed leaf pages."""
    data = path.read_bytes()
    records = []
    for match in re.finditer(rb"BZh91AY&SY", data):
        page = bz2.BZ2Decompressor().decompress(data[match.start():])
        i = 2
        while i + 3 <= len(page):
            klen, vlen = page[i], page[i + 1]
            key = page[i + 3:i + 3 + klen]
            val = page[i + 3 + klen:i + 3 + klen + vlen]
            try:
                sig, name = key.decode(), val.decode()
            except UnicodeDecodeError:
                break
            if not re.fullmatch(r"[a-zA-Z0-9+\-]+", sig) or " : #" not in name:
                break
            records.append((sig, name))
            i += 3 + klen + vlen
    return records


def z2_rank(tri):
    h = tri.homology()
    return h.rank() + sum(1 for i in range(h.countInvariantFactors()) if h.invariantFactor(i) % 2 == 0)


def to_tri_v1(tri):
    lines = [f"tri v1 {tri.size()}"]
    for i in range(tri.size()):
        tet = tri.tetrahedron(i)
        cells = []
        for f in range(4):
            adj = tet.adjacentTetrahedron(f)
            cells.append("-" if adj is None else f"{adj.index()}/{tet.adjacentGluing(f).str()}")
        lines.append(f"t{i}: " + " ".join(cells))
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="tests/fixtures/census")
    parser.add_argument("--max-rank2-tets", type=int, default=7)
    parser.add_argument("--max-small-tets", type=int, default=4)
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    count = 0
    for index, (sig, name) in enumerate(census_records(CENSUS)):
        n = ord(sig[0]) - ord("a")
        if n > max(args.max_rank2_tets, args.max_small_tets):
            continue
        tri = regina.Triangulation3.fromIsoSig(sig)
        rank = z2_rank(tri)
        if not (n <= args.max_small_tets or rank >= 2):
            continue
        header = (f"# census: {name.strip()}\n# isosig: {sig}\n"
                  f"# H1: {tri.homology()}\n# z2-rank: {rank}\n# vertices: {tri.countVertices()}\n")
        (out / f"n{n}_{index:05d}.tri").write_text(header + to_tri_v1(tri))
        count += 1
    print(f"wrote {count} fixtures to {out}")


if __name__ == "__main__":
    main()
