#!/usr/bin/env python3
"""Compile gate for this project: reject syntax errors and undefined names.

Usage: check.py DIR [DIR ...]; exits 1 when any source file fails, mirroring
how a compiled language would reject references to names that do not exist.
"""

import builtins
import sys
import symtable
from pathlib import Path


def undefined_names(path):
    source = path.read_text(encoding="utf-8")
    try:
        table = symtable.symtable(source, str(path), "exec")
    except SyntaxError as exc:
        return ["%s:%s: syntax error: %s" % (path, exc.lineno, exc.msg)]
    module_names = {
        s.get_name()
        for s in table.get_symbols()
        if s.is_assigned() or s.is_imported()
    }
    problems = []

    def walk(tbl):
        for sym in tbl.get_symbols():
            name = sym.get_name()
            if not sym.is_referenced():
                continue
            if sym.is_assigned() or sym.is_imported() or sym.is_parameter():
                continue
            if sym.is_free():
                continue
            if name in module_names or hasattr(builtins, name):
                continue
            problems.append("%s: undefined name '%s'" % (path, name))
        for child in tbl.get_children():
            walk(child)

    walk(table)
    return problems


def main():
    failures = []
    for root in sys.argv[1:]:
        for path in sorted(Path(root).rglob("*.py")):
            failures.extend(undefined_names(path))
    for line in failures:
        print(line, file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
