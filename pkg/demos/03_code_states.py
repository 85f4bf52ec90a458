#!/usr/bin/env python3
# States from classical linear codes: the uniform superposition over the
# codewords of a p-ary code is k-uniform as soon as the code distance and
# the dual distance both exceed k.  Distances are always recomputed by
# enumeration before a state is certified.

from kuniform import (
    dual_code,
    is_self_dual,
    min_distance,
    reed_solomon,
    shorten_last,
    state_from_code,
    verify_uniform,
)
from kuniform.codes import certified_k
from kuniform.fields import get_field
from kuniform.fileio import read_code
from kuniform.fixtures import fixture_path

# The classic self-dual [8,4,4] binary code.
code = read_code(fixture_path("code_8_4_4_binary.txt"))
print("generator:")
print(code.generator)
print("distance:", min_distance(code), " self-dual:", is_self_dual(code))

k, dist, ddist = certified_k(code)
state = state_from_code(code, k)
print(f"state over {len(state)} codewords is {k}-uniform:", verify_uniform(state, k).uniform)

# Shortening: keep codewords ending in zero, drop the coordinate.
# Dimension and length both fall by one; the distance cannot drop.
short = shorten_last(code)
print(f"\nshortened code: [{short.n}, {short.m}]",
      "distance", min_distance(short),
      "dual distance", min_distance(dual_code(short)))
seven = state_from_code(short, 2)
print("7-qubit state is 2-uniform:", verify_uniform(seven, 2).uniform)

# Evaluation codes give the best possible distance at every dimension.
rs = reed_solomon(get_field(5), 5, 2)
print("\nRS [5,2] over GF(5): distance", min_distance(rs),
      " dual distance", min_distance(dual_code(rs)))
k, _, _ = certified_k(rs)
state = state_from_code(rs, k)
print(f"5-qudit level-5 state is {k}-uniform:", verify_uniform(state, k).uniform)
