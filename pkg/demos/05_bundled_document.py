"""Drive the whole pipeline from the bundled JSON document.

Equivalent to `pactop report <file> --format json` but staying inside
Python: parse, validate, globalize, transforms, selector, and the
phenomena worth noticing on this instance.
"""

import json
from importlib import resources

from pactop import (
    build,
    effros_report,
    embedding_report,
    hat_relation_report,
    separation,
    validate,
)
from pactop.cli import parse, serialize

path = resources.files("pactop").joinpath("data/example48.json")
spec = parse(path.read_bytes())
print(f"label: {spec.label}")
print(f"round-trips through serialize: {parse(json.dumps(serialize(spec))) == spec}")

rep = validate(spec.pa)
print(f"valid: {rep.ok}")

glob = build(spec.pa)
sep = separation(glob.topology)
print(f"classes: {glob.num_classes}; envelope T0={sep.t0} T1={sep.t1} T2={sep.t2}")
print("the three basepoint classes are pairwise T0-separated but share")
print("every neighborhood of the v class, so the envelope is not T2")

for report in (embedding_report(glob), hat_relation_report(glob),
               effros_report(spec.pa)):
    print(f"{report.name}: {'ok' if report.ok else report.failures()}")
