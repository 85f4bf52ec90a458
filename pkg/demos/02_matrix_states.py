#!/usr/bin/env python3
# States from zero-diagonal symmetric matrices.  The amplitude of a basis
# string c is zeta_d^(c Ht c^T) with Ht the strict upper triangle of H.
# A certificate on the submatrices of H guarantees k-uniformity, and the
# independent oracle confirms it without knowing where the state came from.

import numpy as np

from kuniform import (
    SymWitness,
    check_certificate_general,
    check_certificate_prime,
    quadratic_phase,
    state_from_matrix,
    verify_uniform,
)
from kuniform.fileio import read_witness
from kuniform.fixtures import fixture_path

# The smallest interesting matrix works at every level d >= 2.
H = [[0, 1], [1, 0]]
for d in (4, 6):
    ok = check_certificate_general(H, d, 1)
    print(f"[[0,1],[1,0]] certifies k=1 at level {d}: {ok}")

# Phases for a few strings at level 4: c = (1,1) picks up zeta_4 = i.
for c in [(0, 0), (1, 1), (2, 1), (3, 3)]:
    print(f"  phase of {c} at level 4:", quadratic_phase(H, c, 4))

w = SymWitness(n=2, d=4, H=np.array(H), k=1)
state = state_from_matrix(w)
print("\nlevel-4 state has", len(state), "kets; 1-uniform:", verify_uniform(state, 1).uniform)

# A 6-qubit matrix certifying k = 3 (the best possible at n = 6).
six = read_witness(fixture_path("witness_6x6_d2.txt"))
print("\n6x6 matrix over Z_2:")
print(six.H)
print("rank certificate for k=3:", check_certificate_prime(six.H, 2, 3))
state = state_from_matrix(six)
report = verify_uniform(state, 3)
print(f"64-ket state is 3-uniform: {report.uniform} (norm {report.norm})")

# The oracle is a real check: break the matrix and it notices.
broken = six.H.copy()
broken[0, 1] = broken[1, 0] = 0
print("\nzeroing one entry kills the certificate:", check_certificate_prime(broken, 2, 3))
