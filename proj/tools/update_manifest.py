#!/usr/bin/env python3
"""Regenerates data/manifest.txt (table id -> file -> FNV-1a-64 checksum).

Scans data/*.tbl, reads each file's `table <id>` line and records the
checksum of the file bytes. Run after any table edit.
"""

import pathlib
import sys


def fnv1a64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def table_id(path: pathlib.Path) -> str:
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line.startswith("table "):
            return line.split()[1]
    raise SystemExit(f"{path}: no 'table' line")


def main() -> None:
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    entries = []
    for path in sorted(root.glob("*.tbl")):
        entries.append((table_id(path), path.name, fnv1a64(path.read_bytes())))
    lines = ["# table-id  file  fnv1a64 (regenerate with tools/update_manifest.py)"]
    lines += [f"{tid} {name} {sum_}" for tid, name, sum_ in entries]
    (root / "manifest.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {root / 'manifest.txt'} ({len(entries)} entries)")


if __name__ == "__main__":
    main()
