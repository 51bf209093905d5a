"""Descending to minimal tuples, recognising traps, exploring components.

The move connects canonical tuples into components; within a component
the complexity function has minima (tuples no rotation can shrink) and
sometimes a root, the unique minimum.  Traps are tuples whose component
never leaves a confined arithmetic progression: their components are
finite, and they encode genus-one spaces, so the genus-two machinery
must detect and skip them.

Run:  python3 demos/orbits_and_traps.py
"""

from twosym import (
    ascend_witness,
    delta,
    explore,
    is_minimal,
    is_root,
    is_trap,
    minimize,
    parse_tuple,
    psi1,
)

f = parse_tuple("(1,3,3;2,2,2)")
print(f"start at {f}")
print(f"rotation deltas: {[delta(f), delta(psi1(f)), delta(psi1(psi1(f)))]}")
m = minimize(f)
print(f"minimize -> {m}   minimal={is_minimal(m)}   root={is_root(m)}")

print("\ntrap detection:")
for text in ["(1,1,3;2,0,2)", "(1,1,9;0,0,4)", "(1,3,3;2,2,2)"]:
    g = parse_tuple(text)
    w = is_trap(g)
    if w is None:
        print(f"  {g}: not a trap")
    else:
        print(f"  {g}: trap of type ({w.r},{w.s}), shifts confined to "
              f"{sorted(w.T)} stepping by {w.d}")

print("\nbounded exploration from (1,3,3;2,2,2) up to complexity 12:")
graph = explore(parse_tuple("(1,3,3;2,2,2)"), 12)
for node in graph.nodes:
    mark = " <- frontier" if node in graph.frontier else ""
    print(f"  {node}  (complexity {node.upsilon}){mark}")
print(f"  {len(graph.edges)} edges; closed={graph.closed}")

print("\na trap's component is just itself:")
trap_graph = explore(parse_tuple("(1,1,3;2,0,2)"), 30)
print(f"  nodes={list(map(str, trap_graph.nodes))} closed={trap_graph.closed}")

print("\nascent certificates (the component is unbounded above):")
for text in ["(1,3,3;2,2,2)", "(1,3,3;0,2,2)", "(3,3,7;4,0,4)"]:
    g = parse_tuple(text)
    w = ascend_witness(g)
    print(f"  {g} -> witness {w} with delta {delta(w)} > 0")
