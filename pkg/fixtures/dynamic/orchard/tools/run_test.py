#!/usr/bin/env python3
"""Run one unit test under line tracing.

Usage: run_test.py tests/test_file.py::test_function

Truncates build/test.log, executes the test function with stdlib trace, and
writes the lines it covered to build/coverage.xml in the JaCoCo report
schema (package/sourcefile/line with mi/ci counters). Exits non-zero when
the test raises.
"""

import importlib.util
import os
import sys
import trace
import xml.etree.ElementTree as ET
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module(path):
    spec = importlib.util.spec_from_file_location(path.stem, path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def write_coverage(counts, src_root, out_path):
    per_file = {}
    for (filename, lineno), hits in counts.items():
        if hits <= 0:
            continue
        resolved = Path(filename).resolve()
        try:
            rel = resolved.relative_to(src_root.resolve())
        except ValueError:
            continue
        per_file.setdefault(rel.as_posix(), set()).add(lineno)
    report = ET.Element("report", name=ROOT.name)
    packages = {}
    for rel in sorted(per_file):
        pkg_name = Path(rel).parent.as_posix()
        pkg_name = "" if pkg_name == "." else pkg_name
        if pkg_name not in packages:
            packages[pkg_name] = ET.SubElement(report, "package", name=pkg_name)
        sourcefile = ET.SubElement(packages[pkg_name], "sourcefile", name=Path(rel).name)
        for nr in sorted(per_file[rel]):
            ET.SubElement(sourcefile, "line", nr=str(nr), mi="0", ci="1")
    ET.ElementTree(report).write(out_path, encoding="utf-8", xml_declaration=True)


def main():
    test_id = sys.argv[1]
    rel_path, func_name = test_id.split("::", 1)
    os.chdir(ROOT)
    build = ROOT / "build"
    build.mkdir(exist_ok=True)
    (build / "test.log").write_text("", encoding="utf-8")
    sys.path.insert(0, str(ROOT / "src"))
    module = load_module(ROOT / rel_path)
    test_fn = getattr(module, func_name)
    tracer = trace.Trace(count=1, trace=0)
    failed = False
    try:
        tracer.runfunc(test_fn)
    except BaseException as exc:
        print("test failed: %r" % (exc,), file=sys.stderr)
        failed = True
    write_coverage(tracer.results().counts, ROOT / "src", build / "coverage.xml")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
