#!/usr/bin/env python3
# Concatenation: codes over GF(p^r) become p-ary codes through a
# trace-orthogonal basis.  The plain expansion of the code and the
# weight-scaled expansion of its dual stay dual to each other, so distance
# and dual distance both survive the descent to the prime field.

from kuniform import (
    dual_code,
    expand_code,
    find_trace_orthogonal_basis,
    min_distance,
    reed_solomon,
    state_from_code,
    verify_uniform,
)
from kuniform.codes import certified_k
from kuniform.fields import get_field

# A trace-orthogonal basis of GF(4) over F_2; the weights are the traces
# of the squared basis elements and feed the dual expansion.
basis = find_trace_orthogonal_basis(2, 2, seed=0)
f4 = basis.field
print("GF(4) basis:", basis.basis, "weights:", basis.weights)
for i, a in enumerate(basis.basis):
    for j, b in enumerate(basis.basis):
        print(f"  Tr(b{i} * b{j}) =", f4.trace(f4.mul(a, b)))

# Expand an MDS code over GF(4) down to a binary code.
rs = reed_solomon(f4, 4, 2)
print("\nRS [4,2] over GF(4): distance", min_distance(rs))
binary = expand_code(rs, basis, "primal")
dual_side = expand_code(dual_code(rs), basis, "dual")
print(f"expanded: [{binary.n}, {binary.m}] over GF(2), distance", min_distance(binary))

# Duality check: the two expansions are orthogonal and their dimensions fill
# the whole expanded length.
prod = (binary.generator @ dual_side.generator.T) % 2
print("expansions orthogonal:", not prod.any(),
      " dimensions:", binary.m, "+", dual_side.m, "=", binary.n)

# The expanded code feeds the usual state construction.
k, dist, ddist = certified_k(binary)
print("\nbinary distances:", dist, ddist, "-> certified k =", k)
state = state_from_code(binary, k)
print(f"{binary.n}-qubit state is {k}-uniform:", verify_uniform(state, k).uniform)

# Larger towers work the same way; GF(9) over F_3 needs the odd-p route
# (direct orthogonalization of the trace form).
b9 = find_trace_orthogonal_basis(3, 2)
print("\nGF(9) basis:", b9.basis, "weights:", b9.weights, "valid:", b9.verify())
