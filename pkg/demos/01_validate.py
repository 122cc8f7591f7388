"""Validate candidate partial actions in both axiom formulations.

Three tables: a total rotation (valid), a restriction of it to an open
piece (valid, genuinely partial), and a hand-broken table where one
inverse fails to undo a move (rejected with a witness).
"""

from pactop import PartialAction, cyclic, discrete, induced, validate

ROTATION = PartialAction(
    cyclic(3), discrete(3), (0b111,) * 3,
    ((0, 1, 2), (1, 2, 0), (2, 0, 1)),
)

carrier = 0b011
restricted = induced(cyclic(3), discrete(3), ROTATION.maps, carrier)

broken = PartialAction(
    cyclic(2), discrete(2), (0b11, 0b11), ((0, 1), (0, 1)),
)

for name, pa in [("rotation", ROTATION), ("restricted", restricted), ("broken", broken)]:
    rep = validate(pa)
    print(f"--- {name}: {'valid' if rep.ok else 'rejected'}")
    print(rep.render_text())
    if not rep.ok:
        for path, check in rep.failures():
            print(f"  witness at {path}: {check.witness}")
    print()
